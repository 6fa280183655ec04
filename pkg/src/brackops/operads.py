"""The colored operad of labelled planar trees and its bracketed
refinement.

An element is a planar tree together with a labelling sigma of its
vertices (the operation's input slots) and a labelling tau of its
leaves.  Composition at slot i substitutes the second tree into the
vertex labelled i, permuting that vertex's inputs according to the
second labelling's tau.  The bracketed variant additionally carries a
weighted bracketing which is transported along substitution; composing
with a large tree records it as a new bracket of weight 1."""

from __future__ import annotations

import json
from fractions import Fraction

from . import trees as T
from .bracketings import (
    WeightedBracketing, bracketing_from_obj, weighted_from_obj,
    weighted_to_obj,
)
from .trees import ETA, PlanarTree, corolla, num_leaves, num_vertices


class OElement:
    """(tree, sigma, tau): sigma[i] is the vertex (DFS id) labelled i+1,
    tau[j] is the planar leaf position labelled j+1."""

    __slots__ = ("tree", "sigma", "tau")

    def __init__(self, tree, sigma, tau):
        sigma = tuple(sigma)
        tau = tuple(tau)
        if sorted(sigma) != list(range(num_vertices(tree))):
            raise ValueError("sigma is not a vertex labelling")
        if sorted(tau) != list(range(num_leaves(tree))):
            raise ValueError("tau is not a leaf labelling")
        self.tree = tree
        self.sigma = sigma
        self.tau = tau

    @property
    def arity(self):
        "Number of input slots (= vertices)."
        return len(self.sigma)

    @property
    def leaf_count(self):
        return len(self.tau)

    def slot_arity(self, i):
        "Arity of the vertex at slot i (1-based)."
        return T.index(self.tree).arity(self.sigma[i - 1])

    def slot_arities(self):
        idx = T.index(self.tree)
        return [idx.arity(v) for v in self.sigma]

    def __eq__(self, other):
        return (isinstance(other, OElement) and self.tree == other.tree
                and self.sigma == other.sigma and self.tau == other.tau)

    def __hash__(self):
        return hash((self.tree, self.sigma, self.tau))

    def __repr__(self):
        return "OElement(%r, sigma=%s, tau=%s)" % (self.tree, self.sigma, self.tau)


def o_unit(n):
    "The corolla with the canonical left-to-right labellings."
    return OElement(corolla(n), (0,), tuple(range(n)))


def eta_element():
    "The vertexless tree: the unique 0-slot element with one leaf."
    return OElement(ETA, (), (0,))


def compose_O_with_maps(a, i, b):
    """compose_O together with the vertex translation maps
    (result, map a-vertex -> new id, map b-vertex -> new id)."""
    if not 1 <= i <= a.arity:
        raise IndexError("slot %d out of range" % i)
    v = a.sigma[i - 1]
    m = T.index(a.tree).arity(v)
    if m != b.leaf_count:
        raise ValueError("arity mismatch: slot has arity %d, argument has %d leaves"
                         % (m, b.leaf_count))
    res = T.substitute_with_maps(a.tree, v, b.tree, tau=b.tau)
    l = b.arity
    sigma = []
    for j in range(1, a.arity + l):
        if j < i:
            sigma.append(res.vmap_host[a.sigma[j - 1]])
        elif j < i + l:
            sigma.append(res.vmap_guest[b.sigma[j - i]])
        else:
            sigma.append(res.vmap_host[a.sigma[j - l]])
    tau = tuple(res.leafmap_host[p] for p in a.tau)
    return OElement(res.tree, sigma, tau), res.vmap_host, res.vmap_guest


def compose_O(a, i, b):
    return compose_O_with_maps(a, i, b)[0]


def sigma_act_O(perm, a):
    """Precompose the slot labelling: new slot i draws on old slot
    perm[i]+1 (perm is 0-based)."""
    perm = tuple(perm)
    if sorted(perm) != list(range(a.arity)):
        raise ValueError("not a permutation of the slots")
    return OElement(a.tree, tuple(a.sigma[p] for p in perm), a.tau)


def tau_act_O(perm, a):
    "Postcompose the leaf labelling by a permutation (0-based)."
    perm = tuple(perm)
    if sorted(perm) != list(range(a.leaf_count)):
        raise ValueError("not a permutation of the leaves")
    return OElement(a.tree, a.sigma, tuple(a.tau[p] for p in perm))


class BOElement:
    "An OElement with a weighted bracketing on its tree."

    __slots__ = ("base", "weighted")

    def __init__(self, base, weighted=None):
        if weighted is None:
            weighted = WeightedBracketing(base.tree, {})
        if weighted.tree != base.tree:
            raise ValueError("bracketing lives on a different tree")
        self.base = base
        self.weighted = weighted

    @property
    def arity(self):
        return self.base.arity

    @property
    def leaf_count(self):
        return self.base.leaf_count

    def slot_arity(self, i):
        return self.base.slot_arity(i)

    def __eq__(self, other):
        return (isinstance(other, BOElement) and self.base == other.base
                and self.weighted == other.weighted)

    def __hash__(self):
        return hash((self.base, self.weighted))

    def __repr__(self):
        return "BOElement(%r, %r)" % (self.base, self.weighted)


def unit_BO(n):
    return BOElement(o_unit(n))


def eta_BO():
    return BOElement(eta_element())


def bo_element(tree, sigma, tau, weights=()):
    return BOElement(OElement(tree, sigma, tau),
                     WeightedBracketing(tree, dict(weights)))


def compose_BO(a, i, b):
    """Compose the underlying labelled trees and transport the brackets:
    a bracket containing the substituted vertex absorbs the whole of the
    second tree (and is discarded if the vertexless tree shrinks it
    below two vertices); the second factor's brackets are carried over;
    if the second tree has at least two vertices it becomes a new
    bracket of weight 1.  Set collisions keep the larger weight."""
    base, vmap_a, vmap_b = compose_O_with_maps(a.base, i, b.base)
    v = a.base.sigma[i - 1]
    guest = frozenset(vmap_b.values())
    total = num_vertices(base.tree)
    new_weights = {}

    def put(vset, w):
        # brackets that shrink below two vertices or swallow the whole
        # tree stop being brackets
        if len(vset) < 2 or len(vset) >= total:
            return
        if vset in new_weights:
            new_weights[vset] = max(new_weights[vset], w)
        else:
            new_weights[vset] = w

    for vset, w in a.weighted.weights:
        if v not in vset:
            put(frozenset(vmap_a[u] for u in vset), w)
        else:
            put(frozenset(vmap_a[u] for u in vset if u != v) | guest, w)
    for vset, w in b.weighted.weights:
        put(frozenset(vmap_b[u] for u in vset), w)
    put(guest, Fraction(1))
    return BOElement(base, WeightedBracketing(base.tree, new_weights))


def sigma_act_BO(perm, a):
    return BOElement(sigma_act_O(perm, a.base), a.weighted)


def forget_brackets(a):
    return a.base


# ---------------------------------------------------------------------------
# Serialization.

def o_to_obj(a):
    return {"tree": T.tree_to_obj(a.tree),
            "sigma": [v + 1 for v in a.sigma],
            "tau": [p + 1 for p in a.tau]}


def o_from_obj(obj):
    tree = T.tree_from_obj(obj["tree"])
    return OElement(tree, [v - 1 for v in obj["sigma"]],
                    [p - 1 for p in obj["tau"]])


def bo_to_obj(a):
    obj = o_to_obj(a.base)
    obj["brackets"] = weighted_to_obj(a.weighted)
    return obj


def bo_from_obj(obj):
    base = o_from_obj(obj)
    return BOElement(base, weighted_from_obj(base.tree, obj.get("brackets", [])))


def bo_to_json(a):
    return json.dumps(bo_to_obj(a), sort_keys=True, separators=(",", ":"))


def bo_from_json(text):
    return bo_from_obj(json.loads(text))
