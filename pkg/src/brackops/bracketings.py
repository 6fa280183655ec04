"""Bracketings of a planar tree: nested families of large proper
subtrees, the inclusion poset, its order complex, and weighted
bracketings with their chain form."""

from __future__ import annotations

import json
from fractions import Fraction

from .trees import (
    enumerate_subtrees, frac_from_str, frac_to_str, is_connected,
    num_vertices, vsets_nested,
)


def _canon_key(vset):
    return (len(vset), tuple(sorted(vset)))


class Bracketing:
    "A set of nested, large (>= 2 vertices), proper subtrees of a tree."

    __slots__ = ("tree", "brackets")

    def __init__(self, tree, brackets=(), validate=True):
        brackets = frozenset(frozenset(b) for b in brackets)
        if validate:
            n = num_vertices(tree)
            for b in brackets:
                if len(b) < 2:
                    raise ValueError("bracket %s is not large" % sorted(b))
                if len(b) >= n:
                    raise ValueError("bracket %s is not proper" % sorted(b))
                if not is_connected(tree, b):
                    raise ValueError("bracket %s is not a subtree" % sorted(b))
            bl = sorted(brackets, key=_canon_key)
            for i, a in enumerate(bl):
                for b in bl[i + 1:]:
                    if not vsets_nested(a, b):
                        raise ValueError("brackets %s and %s are not nested"
                                         % (sorted(a), sorted(b)))
        self.tree = tree
        self.brackets = brackets

    def sorted_brackets(self):
        return sorted(self.brackets, key=_canon_key)

    def __eq__(self, other):
        return (isinstance(other, Bracketing) and self.tree == other.tree
                and self.brackets == other.brackets)

    def __le__(self, other):
        return self.tree == other.tree and self.brackets <= other.brackets

    def __lt__(self, other):
        return self <= other and self.brackets != other.brackets

    def __hash__(self):
        return hash((self.tree, self.brackets))

    def __repr__(self):
        return "Bracketing(%s)" % [sorted(b) for b in self.sorted_brackets()]


class WeightedBracketing:
    """A bracketing with a rational weight in (0,1] per bracket.  Normal
    form: weight-0 brackets are dropped at construction time."""

    __slots__ = ("tree", "weights")

    def __init__(self, tree, weights, validate=True):
        items = []
        for vset, w in (weights.items() if isinstance(weights, dict) else weights):
            w = Fraction(w)
            if w == 0:
                continue
            if not 0 < w <= 1:
                raise ValueError("weight %s outside (0,1]" % w)
            items.append((frozenset(vset), w))
        items.sort(key=lambda it: _canon_key(it[0]))
        if validate:
            Bracketing(tree, [v for v, _ in items])
            if len(set(v for v, _ in items)) != len(items):
                raise ValueError("duplicate bracket")
        self.tree = tree
        self.weights = tuple(items)

    @property
    def bracketing(self):
        return Bracketing(self.tree, [v for v, _ in self.weights], validate=False)

    def as_dict(self):
        return dict(self.weights)

    def __eq__(self, other):
        return (isinstance(other, WeightedBracketing)
                and self.tree == other.tree and self.weights == other.weights)

    def __hash__(self):
        return hash((self.tree, self.weights))

    def __repr__(self):
        return "WeightedBracketing(%s)" % (
            [(sorted(v), str(w)) for v, w in self.weights],)


class BracketChain:
    "A strictly increasing chain of bracketings with simplex coordinates."

    __slots__ = ("chain", "coords")

    def __init__(self, chain, coords):
        chain = tuple(chain)
        coords = tuple(Fraction(c) for c in coords)
        if len(chain) != len(coords):
            raise ValueError("chain/coordinate length mismatch")
        if not chain:
            raise ValueError("empty chain")
        if coords[0] != 1:
            raise ValueError("first coordinate must be 1")
        for a, b in zip(chain, chain[1:]):
            if not a < b:
                raise ValueError("chain is not strictly increasing")
        for a, b in zip(coords, coords[1:]):
            if not a >= b:
                raise ValueError("coordinates must be weakly decreasing")
        if any(not 0 <= c <= 1 for c in coords):
            raise ValueError("coordinates outside [0,1]")
        self.chain = chain
        self.coords = coords

    def __eq__(self, other):
        return (isinstance(other, BracketChain)
                and self.chain == other.chain and self.coords == other.coords)

    def __repr__(self):
        return "BracketChain(%r, %s)" % (list(self.chain),
                                         [str(c) for c in self.coords])


def enumerate_bracketings(tree):
    """All bracketings of the tree, sorted canonically; the empty
    bracketing is always first."""
    subs = [s.vertex_set for s in enumerate_subtrees(tree, 2)]
    n = num_vertices(tree)
    subs = [s for s in subs if len(s) < n]
    out = []

    def extend(chosen, rest):
        out.append(Bracketing(tree, chosen, validate=False))
        for pos, cand in enumerate(rest):
            nxt = [r for r in rest[pos + 1:] if vsets_nested(cand, r)]
            extend(chosen + [cand], nxt)

    # candidates in canonical order so output is deterministic
    subs.sort(key=_canon_key)
    extend([], subs)
    out.sort(key=lambda b: (len(b.brackets),
                            [_canon_key(v) for v in b.sorted_brackets()]))
    return out


def maximal_bracketings(tree):
    "Bracketings not strictly contained in any other."
    all_b = enumerate_bracketings(tree)
    sets = [b.brackets for b in all_b]
    return [b for b in all_b
            if not any(b.brackets < s for s in sets)]


def nerve_statistics(tree, limit=7):
    """f-vector and Euler characteristic of the order complex of the
    bracketing poset: f[r] counts chains of r+1 distinct bracketings;
    chi = sum (-1)^r f[r].  Contractibility shows up as chi == 1."""
    if num_vertices(tree) > limit:
        raise ValueError("tree exceeds the enumeration limit (%d vertices)" % limit)
    elems = enumerate_bracketings(tree)
    n = len(elems)
    below = [[] for _ in range(n)]
    for i, a in enumerate(elems):
        for j, b in enumerate(elems):
            if i != j and a.brackets < b.brackets:
                below[j].append(i)
    # chains_ending[j][r] = number of (r+1)-element chains with top j
    chains_ending = [None] * n
    order = sorted(range(n), key=lambda j: len(elems[j].brackets))
    for j in order:
        row = [1]
        for i in below[j]:
            for r, cnt in enumerate(chains_ending[i]):
                while len(row) <= r + 1:
                    row.append(0)
                row[r + 1] += cnt
        chains_ending[j] = row
    fvec = []
    for j in range(n):
        for r, cnt in enumerate(chains_ending[j]):
            while len(fvec) <= r:
                fvec.append(0)
            fvec[r] += cnt
    chi = sum((-1) ** r * f for r, f in enumerate(fvec))
    return tuple(fvec), chi


def weights_to_chain(w):
    """Group brackets by weight value, descending; level l of the chain
    collects all brackets of weight >= the l-th distinct value.  If no
    bracket has weight 1 the chain is padded with an empty level of
    coordinate 1."""
    values = sorted({wt for _, wt in w.weights}, reverse=True)
    if not values or values[0] != 1:
        values = [Fraction(1)] + values
    chain = []
    for val in values:
        level = [v for v, wt in w.weights if wt >= val]
        chain.append(Bracketing(w.tree, level, validate=False))
    return BracketChain(chain, values)


def chain_to_weights(c):
    "Inverse of weights_to_chain up to normal form (weight 0 dropped)."
    weights = {}
    prev = frozenset()
    for level, coord in zip(c.chain, c.coords):
        for vset in level.brackets - prev:
            weights[vset] = coord
        prev = level.brackets
    return WeightedBracketing(c.chain[0].tree, weights, validate=False)


# ---------------------------------------------------------------------------
# Serialization.

def bracketing_to_obj(b):
    return [sorted(v) for v in b.sorted_brackets()]


def bracketing_from_obj(tree, obj):
    return Bracketing(tree, [frozenset(v) for v in obj])


def weighted_to_obj(w):
    return [{"vertices": sorted(v), "w": frac_to_str(wt)} for v, wt in w.weights]


def weighted_from_obj(tree, obj):
    return WeightedBracketing(
        tree, [(frozenset(d["vertices"]), frac_from_str(d["w"])) for d in obj])


def bracketing_to_json(b):
    return json.dumps(bracketing_to_obj(b), sort_keys=True, separators=(",", ":"))
