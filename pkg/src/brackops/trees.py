"""Rooted planar trees: grafting, substitution, subtrees.

Trees are stored recursively.  A tree is either the vertexless tree Eta
(one edge, no vertices) or a root vertex with an ordered tuple of
children; every child is again a tree, and a child equal to Eta plays
the role of a leaf edge.  Vertices are addressed by their index in
depth-first (root first, children left to right) order, which is stable
for a given tree; the surgery operations return translation maps so
that vertex references can be transported across compositions.
"""

from __future__ import annotations

import itertools
import json
from fractions import Fraction


class PlanarTree:
    """A rooted planar tree.  `children` is a tuple of PlanarTree values;
    the singleton ETA stands for both the vertexless tree and a leaf."""

    __slots__ = ("children", "_hash")

    def __init__(self, children=()):
        children = tuple(children)
        for c in children:
            if not isinstance(c, PlanarTree):
                raise TypeError("children must be PlanarTree values")
        object.__setattr__(self, "children", children)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, *a):
        raise AttributeError("PlanarTree is immutable")

    @property
    def is_eta(self):
        return False

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, PlanarTree) or other.is_eta:
            return False
        return self.children == other.children

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash(("node", self.children))
            object.__setattr__(self, "_hash", h)
        return h

    def __repr__(self):
        if self.is_eta:
            return "ETA"
        return "PlanarTree(%s)" % (list(self.children),)


class _Eta(PlanarTree):
    __slots__ = ()

    def __init__(self):
        object.__setattr__(self, "children", ())
        object.__setattr__(self, "_hash", hash("eta"))

    @property
    def is_eta(self):
        return True

    def __eq__(self, other):
        return isinstance(other, PlanarTree) and other.is_eta

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return "ETA"


ETA = _Eta()


def corolla(n):
    "The one-vertex tree with n leaves."
    return PlanarTree((ETA,) * n)


def caterpillar(n, arity=2):
    """A chain of n vertices: each vertex has `arity` inputs, the first
    of which carries the next vertex (the last vertex has only leaves)."""
    t = corolla(arity)
    for _ in range(n - 1):
        t = PlanarTree((t,) + (ETA,) * (arity - 1))
    return t


def star(arms, arm_arity=1):
    "A root vertex with `arms` vertex children, each with `arm_arity` leaves."
    return PlanarTree(tuple(corolla(arm_arity) for _ in range(arms)))


# ---------------------------------------------------------------------------
# Indexing: DFS vertex ids, planar leaf positions, parent/child tables.

class TreeIndex:
    """Tables for a tree: for each vertex (by DFS id) its subtree object,
    parent id (-1 for the root), slot in the parent, arity, and the list
    of child entries ('v', child_id) / ('l', leaf_position)."""

    def __init__(self, tree):
        self.tree = tree
        self.subtree = []
        self.parent = []
        self.parent_slot = []
        self.child_entries = []
        self.leaf_at = []  # leaf position -> (vertex_id, slot); [] for Eta
        if tree.is_eta:
            return

        def walk(node, par, slot):
            vid = len(self.subtree)
            self.subtree.append(node)
            self.parent.append(par)
            self.parent_slot.append(slot)
            self.child_entries.append([])
            for s, ch in enumerate(node.children):
                if ch.is_eta:
                    self.child_entries[vid].append(("l", None))
                else:
                    self.child_entries[vid].append(("v", None))
            # second pass fills ids once children are walked
            for s, ch in enumerate(node.children):
                if ch.is_eta:
                    pos = len(self.leaf_at)
                    self.leaf_at.append((vid, s))
                    self.child_entries[vid][s] = ("l", pos)
                else:
                    cid = walk(ch, vid, s)
                    self.child_entries[vid][s] = ("v", cid)
            return vid

        walk(tree, -1, -1)

    def arity(self, vid):
        return len(self.subtree[vid].children)

    def num_vertices(self):
        return len(self.subtree)

    def vertex_children(self, vid):
        "Ids of vertex children only, in planar order."
        return [c for k, c in self.child_entries[vid] if k == "v"]

    def descendants(self, vid):
        "DFS ids of vid and everything above it."
        out = [vid]
        for c in self.vertex_children(vid):
            out.extend(self.descendants(c))
        return out


def index(tree):
    return TreeIndex(tree)


def num_vertices(tree):
    if tree.is_eta:
        return 0
    return 1 + sum(num_vertices(c) for c in tree.children if not c.is_eta)


def num_leaves(tree):
    if tree.is_eta:
        return 1
    return sum(num_leaves(c) for c in tree.children) if tree.children else 0


def arities(tree):
    "Vertex arities in DFS order."
    idx = index(tree)
    return [idx.arity(v) for v in range(idx.num_vertices())]


# ---------------------------------------------------------------------------
# Surgery.  Internally trees are turned into tagged mutable nests so that
# provenance of every vertex and leaf survives the operation.

def _tag(tree, src):
    "Mutable nest ['V', (src, vid), [children]] / ['L', (src, leafpos)]."
    vc = itertools.count()
    lc = itertools.count()

    def rec(node):
        me = ["V", (src, next(vc)), []]
        for ch in node.children:
            if ch.is_eta:
                me[2].append(["L", (src, next(lc))])
            else:
                me[2].append(rec(ch))
        return me

    if tree.is_eta:
        return ["L", (src, 0)]
    return rec(tree)


def _untag(nest):
    "Rebuild a PlanarTree plus vertex/leaf provenance maps."
    vmap = {}
    lmap = {}
    vc = itertools.count()
    lc = itertools.count()

    def rec(node):
        if node[0] == "L":
            lmap[node[1]] = next(lc)
            return ETA
        vmap[node[1]] = next(vc)
        return PlanarTree(tuple(rec(c) for c in node[2]))

    t = rec(nest)
    return t, vmap, lmap


def _find(nest, kind, tag):
    if nest[0] == kind and nest[1] == tag:
        return nest, None, None
    if nest[0] == "V":
        for s, c in enumerate(nest[2]):
            got = _find(c, kind, tag)
            if got[0] is not None:
                if got[1] is None:
                    return got[0], nest, s
                return got
    return None, None, None


def _leaves_of(nest):
    if nest[0] == "L":
        return [(None, None)]
    out = []

    def rec(node, par):
        for s, c in enumerate(node[2]):
            if c[0] == "L":
                out.append((node, s))
            else:
                rec(c, node)

    rec(nest, None)
    return out


class SurgeryResult:
    """Result of graft/substitute with translation maps: `vmap_host` /
    `vmap_guest` take old vertex ids to new ones, `leafmap_host` /
    `leafmap_guest` likewise for planar leaf positions."""

    def __init__(self, tree, vmap, lmap):
        self.tree = tree
        self.vmap_host = {k[1]: v for k, v in vmap.items() if k[0] == "a"}
        self.vmap_guest = {k[1]: v for k, v in vmap.items() if k[0] == "b"}
        self.leafmap_host = {k[1]: v for k, v in lmap.items() if k[0] == "a"}
        self.leafmap_guest = {k[1]: v for k, v in lmap.items() if k[0] == "b"}


def graft_with_maps(t, i, t2):
    "Attach the root of t2 at leaf i (1-based planar index) of t."
    nl = num_leaves(t)
    if not 1 <= i <= nl:
        raise IndexError("leaf index %d out of range (tree has %d leaves)" % (i, nl))
    if t2.is_eta:
        # unit: nothing changes, identity maps
        res = SurgeryResult(t, {}, {})
        res.vmap_host = {v: v for v in range(num_vertices(t))}
        res.leafmap_host = {p: p for p in range(nl)}
        res.vmap_guest = {}
        res.leafmap_guest = {}
        return res
    if t.is_eta:
        res = SurgeryResult(t2, {}, {})
        res.vmap_host = {}
        res.leafmap_host = {}
        res.vmap_guest = {v: v for v in range(num_vertices(t2))}
        res.leafmap_guest = {p: p for p in range(num_leaves(t2))}
        return res
    na = _tag(t, "a")
    nb = _tag(t2, "b")
    node, par, slot = _find(na, "L", ("a", i - 1))
    if par is None:
        raise IndexError("leaf not found")
    par[2][slot] = nb
    tree, vmap, lmap = _untag(na)
    return SurgeryResult(tree, vmap, lmap)


def graft(t, i, t2):
    return graft_with_maps(t, i, t2).tree


def substitute_with_maps(t, v, t2, tau=None):
    """Replace vertex v of t by the tree t2, attaching v's children to
    the leaves of t2.  `tau` (optional) is a tuple with tau[j] = planar
    leaf position of t2 that receives input j of v; identity if omitted.
    Requires arity(v) == num_leaves(t2)."""
    idx = index(t)
    if not 0 <= v < idx.num_vertices():
        raise IndexError("no vertex %r" % (v,))
    m = idx.arity(v)
    if num_leaves(t2) != m:
        raise ValueError("arity mismatch: vertex has %d inputs, tree has %d leaves"
                         % (m, num_leaves(t2)))
    if tau is None:
        tau = tuple(range(m))
    if sorted(tau) != list(range(m)):
        raise ValueError("tau is not a permutation of 0..%d" % (m - 1))
    na = _tag(t, "a")
    node, par, slot = _find(na, "V", ("a", v))
    old_children = node[2]
    if t2.is_eta:
        # v removed, its single input identified with its output
        repl = old_children[0]
    else:
        nb = _tag(t2, "b")
        # leaf at planar position q of t2 receives child tau^{-1}(q)
        inv = [0] * m
        for j, q in enumerate(tau):
            inv[q] = j
        for q, (lp, ls) in enumerate(_leaves_of(nb)):
            lp[2][ls] = old_children[inv[q]]
        repl = nb
    if par is None:
        na = repl
    else:
        par[2][slot] = repl
    if na[0] == "L":
        tree, vmap, lmap = ETA, {}, {na[1]: 0}
    else:
        tree, vmap, lmap = _untag(na)
    return SurgeryResult(tree, vmap, lmap)


def substitute(t, v, t2):
    return substitute_with_maps(t, v, t2).tree


def substitute_labelled(t, v, tau2, t2):
    "Permute the inputs of v by tau2, then substitute t2."
    return substitute_with_maps(t, v, t2, tau=tuple(tau2)).tree


# ---------------------------------------------------------------------------
# Subtrees.

class Subtree:
    "A connected set of vertices of a parent tree, with arities preserved."

    __slots__ = ("parent", "vertex_set")

    def __init__(self, parent, vertex_set):
        vertex_set = frozenset(vertex_set)
        if not vertex_set:
            raise ValueError("subtree must be nonempty")
        if not is_connected(parent, vertex_set):
            raise ValueError("vertex set is not connected")
        self.parent = parent
        self.vertex_set = vertex_set

    def __eq__(self, other):
        return (isinstance(other, Subtree) and self.parent == other.parent
                and self.vertex_set == other.vertex_set)

    def __hash__(self):
        return hash((self.parent, self.vertex_set))

    def __repr__(self):
        return "Subtree(%s)" % sorted(self.vertex_set)


def is_connected(tree, vset):
    "True iff vset induces a connected subgraph of the tree."
    if not vset:
        return True
    idx = index(tree)
    root_count = sum(1 for v in vset if idx.parent[v] not in vset)
    return root_count == 1


def subtree_root(tree, vset):
    "The vertex of vset whose parent lies outside it."
    idx = index(tree)
    roots = [v for v in vset if idx.parent[v] not in vset]
    if len(roots) != 1:
        raise ValueError("not a connected subtree")
    return roots[0]


def subtree_leaf_count(tree, vset):
    "Number of edges leaving the vertex set upward (arities preserved)."
    idx = index(tree)
    n = 0
    for v in vset:
        for kind, ref in idx.child_entries[v]:
            if kind == "l" or ref not in vset:
                n += 1
    return n


def restrict(tree, vset):
    "The subtree on vset as a standalone tree (exits become leaves)."
    idx = index(tree)
    root = subtree_root(tree, vset)

    def rec(v):
        ch = []
        for kind, ref in idx.child_entries[v]:
            if kind == "l" or ref not in vset:
                ch.append(ETA)
            else:
                ch.append(rec(ref))
        return PlanarTree(tuple(ch))

    return rec(root)


def restrict_with_map(tree, vset):
    "restrict() together with {old vertex id: new vertex id}."
    idx = index(tree)
    root = subtree_root(tree, vset)
    vmap = {}
    counter = itertools.count()

    def rec(v):
        vmap[v] = next(counter)
        ch = []
        for kind, ref in idx.child_entries[v]:
            if kind == "l" or ref not in vset:
                ch.append(ETA)
            else:
                ch.append(rec(ref))
        return PlanarTree(tuple(ch))

    return rec(root), vmap


def collapse_with_map(tree, vsets):
    """Collapse each of the pairwise disjoint connected vertex sets to a
    single vertex.  Returns (tree, map old id -> new id); all vertices
    of a collapsed set map to the id of its replacement vertex."""
    idx = index(tree)
    owner = {}
    for k, vs in enumerate(vsets):
        for v in vs:
            if v in owner:
                raise ValueError("vertex sets overlap")
            owner[v] = k
    roots = {subtree_root(tree, vs): k for k, vs in enumerate(vsets)}
    vmap = {}
    counter = itertools.count()

    def exits(v, k):
        "Child entries leaving set k, planar order, as nest children."
        out = []
        for kind, ref in idx.child_entries[v]:
            if kind == "l":
                out.append(ETA)
            elif ref in owner and owner[ref] == k:
                out.extend(exits(ref, k))
            else:
                out.append(rec(ref))
        return out

    def rec(v):
        if v in roots:
            k = roots[v]
            new_id = next(counter)
            for u in vsets[k]:
                vmap[u] = new_id
            return PlanarTree(tuple(exits(v, k)))
        vmap[v] = next(counter)
        ch = []
        for kind, ref in idx.child_entries[v]:
            if kind == "l":
                ch.append(ETA)
            else:
                ch.append(rec(ref))
        return PlanarTree(tuple(ch))

    if tree.is_eta:
        return tree, {}
    # counter order must match DFS order of the result: rebuild ids afterwards
    t = rec(0)
    # rec assigned ids in construction order, which *is* DFS order here
    return t, vmap


def subtree_boundary_edges(tree, vset):
    """The edges leaving vset upward, in planar order, each described as
    (vertex, slot) of its lower end.  These are the leaves of restrict()."""
    idx = index(tree)
    root = subtree_root(tree, vset)
    out = []

    def rec(v):
        for s, (kind, ref) in enumerate(idx.child_entries[v]):
            if kind == "l" or ref not in vset:
                out.append((v, s))
            else:
                rec(ref)

    rec(root)
    return out


def enumerate_subtrees(tree, min_vertices=1):
    """All connected vertex subsets of size >= min_vertices, in a
    deterministic order (by size, then lexicographically)."""
    idx = index(tree)
    n = idx.num_vertices()
    found = []

    # grow connected sets downward-closed from each root choice
    def grow(current, candidates):
        found.append(frozenset(current))
        for pos, c in enumerate(candidates):
            grow(current | {c},
                 candidates[pos + 1:] + tuple(idx.vertex_children(c)))

    for r in range(n):
        grow({r}, tuple(idx.vertex_children(r)))
    sets = sorted(set(found), key=lambda s: (len(s), sorted(s)))
    return [Subtree(tree, s) for s in sets if len(s) >= min_vertices]


def is_nested(s1, s2):
    "Nestedness of two subtrees of the same parent tree."
    if s1.parent != s2.parent:
        raise ValueError("subtrees of different parent trees")
    inter = s1.vertex_set & s2.vertex_set
    return inter in (frozenset(), s1.vertex_set, s2.vertex_set)


def vsets_nested(a, b):
    inter = a & b
    return not inter or inter == a or inter == b


# ---------------------------------------------------------------------------
# Enumeration of tree shapes (test/CLI grids).

def planar_skeletons(n):
    """All planar trees with n vertices and no extra leaves (every child
    of every vertex is a vertex)."""
    if n == 0:
        return [ETA]
    if n == 1:
        return [PlanarTree(())]
    out = []
    for split in _compositions(n - 1):
        for forest in itertools.product(*[planar_skeletons(k) for k in split]):
            out.append(PlanarTree(forest))
    return out


def _compositions(n):
    "Ordered compositions of n into positive parts (n >= 1)."
    if n == 0:
        return [()]
    out = []
    for first in range(1, n + 1):
        for rest in _compositions(n - first):
            out.append((first,) + rest)
    return out


def planar_trees(num_verts, num_lvs):
    "All planar trees with the given vertex and leaf counts."
    key = (num_verts, num_lvs)
    if key in _tree_cache:
        return _tree_cache[key]
    if num_verts == 0:
        out = [ETA] if num_lvs == 1 else []
    else:
        out = []
        for child_count in range(0, num_verts + num_lvs):
            for kinds in itertools.product("vl", repeat=child_count):
                nv = kinds.count("v")
                if nv > num_verts - 1 or child_count - nv > num_lvs:
                    continue
                out.extend(_fill(kinds, num_verts - 1, num_lvs))
    _tree_cache[key] = out
    return out


def _fill(kinds, verts_left, leaves_left):
    if not kinds:
        if verts_left == 0 and leaves_left == 0:
            return [PlanarTree(())]
        return []
    out = []
    head, rest = kinds[0], kinds[1:]
    if head == "l":
        if leaves_left > 0:
            for t in _fill(rest, verts_left, leaves_left - 1):
                out.append(PlanarTree((ETA,) + t.children))
    else:
        for nv in range(1, verts_left + 1):
            for nl in range(0, leaves_left + 1):
                subs = planar_trees(nv, nl)
                if not subs:
                    continue
                tails = _fill(rest, verts_left - nv, leaves_left - nl)
                for s in subs:
                    for t in tails:
                        out.append(PlanarTree((s,) + t.children))
    return out


_tree_cache = {}


# ---------------------------------------------------------------------------
# Serialization.

def tree_to_obj(tree, top=True):
    if tree.is_eta:
        return "eta" if top else "leaf"
    return {"node": [tree_to_obj(c, top=False) for c in tree.children]}


def tree_from_obj(obj, top=True):
    if obj == "eta":
        if not top:
            raise ValueError('"eta" is only valid at top level')
        return ETA
    if obj == "leaf":
        if top:
            raise ValueError('"leaf" is not a tree; use "eta"')
        return ETA
    if isinstance(obj, dict) and set(obj) == {"node"}:
        return PlanarTree(tuple(tree_from_obj(c, top=False) for c in obj["node"]))
    raise ValueError("malformed tree object: %r" % (obj,))


def tree_to_json(tree):
    return json.dumps(tree_to_obj(tree), sort_keys=True, separators=(",", ":"))


def tree_from_json(text):
    return tree_from_obj(json.loads(text))


def frac_to_str(q):
    q = Fraction(q)
    return "%d/%d" % (q.numerator, q.denominator)


def frac_from_str(s):
    if isinstance(s, int):
        return Fraction(s)
    return Fraction(s)
