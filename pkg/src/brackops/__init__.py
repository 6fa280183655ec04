"""Exact-arithmetic operads of bracketed trees and normalized cacti."""

__version__ = "0.1.0"
