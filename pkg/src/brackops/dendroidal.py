"""The category of trees with subtree-valued morphisms, its weighted
thickening, and the nerve construction that turns an algebra handle
into a diagram indexed by trees.

A morphism S -> T is stored extensionally: a map on edges together
with, for every vertex of S, the connected set of T-vertices it
expands to (the empty set for a vertex degenerating onto an edge).
Edges are named ("out", vertex_id) or ("leaf", leaf_position); the
vertexless tree has the single edge ("leaf", 0)."""

from __future__ import annotations

import itertools
import json
from fractions import Fraction

from . import trees as T
from .trees import ETA, PlanarTree
from .bracketings import Bracketing, WeightedBracketing
from .operads import OElement, BOElement


# ---------------------------------------------------------------------------
# Edge bookkeeping.

def edges(tree):
    "All edges of a tree, output edges first, in id order."
    if tree.is_eta:
        return [("leaf", 0)]
    idx = T.index(tree)
    out = [("out", v) for v in range(idx.num_vertices())]
    out += [("leaf", p) for p in range(len(idx.leaf_at))]
    return out


def root_edge(tree):
    return ("leaf", 0) if tree.is_eta else ("out", 0)


def in_edges(idx, v):
    "Input edges of a vertex, in planar slot order."
    out = []
    for kind, ref in idx.child_entries[v]:
        out.append(("leaf", ref) if kind == "l" else ("out", ref))
    return out


def boundary_edge_list(tree, vset):
    "Edges leaving the vertex set upward, in planar order."
    idx = T.index(tree)
    out = []
    for v, s in T.subtree_boundary_edges(tree, vset):
        kind, ref = idx.child_entries[v][s]
        out.append(("leaf", ref) if kind == "l" else ("out", ref))
    return out


# ---------------------------------------------------------------------------
# Morphisms of the tree category.

class OmegaMorphism:
    """A morphism of trees S -> T: an edge map plus one connected set of
    target vertices per source vertex (empty = degenerated onto the
    image of the vertex's edges)."""

    __slots__ = ("source", "target", "edge_map", "vertex_images", "_hash")

    def __init__(self, source, target, edge_map, vertex_images, validate=True):
        edge_map = dict(edge_map)
        vertex_images = tuple(frozenset(s) for s in vertex_images)
        if validate:
            _validate_morphism(source, target, edge_map, vertex_images)
        object.__setattr__(self, "source", source)
        object.__setattr__(self, "target", target)
        object.__setattr__(self, "edge_map", edge_map)
        object.__setattr__(self, "vertex_images", vertex_images)
        object.__setattr__(self, "_hash", hash(
            (source, target, tuple(sorted(edge_map.items())), vertex_images)))

    def __setattr__(self, *a):
        raise AttributeError("morphisms are immutable")

    def __eq__(self, other):
        return (isinstance(other, OmegaMorphism)
                and self.source == other.source and self.target == other.target
                and self.edge_map == other.edge_map
                and self.vertex_images == other.vertex_images)

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return "OmegaMorphism(images=%s)" % (
            [sorted(s) for s in self.vertex_images],)


def _validate_morphism(source, target, edge_map, vertex_images):
    src_edges = set(edges(source))
    tgt_edges = set(edges(target))
    if set(edge_map) != src_edges:
        raise ValueError("edge map must be defined on exactly the source edges")
    for e in edge_map.values():
        if e not in tgt_edges:
            raise ValueError("edge map value %r is not a target edge" % (e,))
    n = 0 if source.is_eta else T.num_vertices(source)
    if len(vertex_images) != n:
        raise ValueError("need one image per source vertex")
    if n == 0:
        return
    idx = T.index(source)
    seen = set()
    for v in range(n):
        img = vertex_images[v]
        ins = [edge_map[e] for e in in_edges(idx, v)]
        oe = edge_map[("out", v)]
        if not img:
            if idx.arity(v) != 1:
                raise ValueError("only a unary vertex may degenerate")
            if ins[0] != oe:
                raise ValueError("degenerate vertex must collapse its edges")
            continue
        if img & seen:
            raise ValueError("vertex images overlap")
        seen |= img
        if not T.is_connected(target, img):
            raise ValueError("vertex image is not connected")
        if oe != ("out", T.subtree_root(target, img)):
            raise ValueError("image root edge does not match the output edge")
        if sorted(boundary_edge_list(target, img)) != sorted(ins):
            raise ValueError("image leaf edges do not match the input edges")


def corolla_image(g, v):
    "The set of target vertices the corolla at v expands to."
    if not 0 <= v < len(g.vertex_images):
        raise IndexError("unknown vertex %d" % v)
    return g.vertex_images[v]


def is_degenerate_at(g, v):
    return not g.vertex_images[v]


def identity_omega(tree):
    em = {e: e for e in edges(tree)}
    n = 0 if tree.is_eta else T.num_vertices(tree)
    return OmegaMorphism(tree, tree, em, [frozenset([v]) for v in range(n)])


def compose_omega(g, f):
    "The composite g o f; boundaries must match."
    if f.target != g.source:
        raise ValueError("morphisms are not composable")
    em = {e: g.edge_map[fe] for e, fe in f.edge_map.items()}
    imgs = []
    for w in range(len(f.vertex_images)):
        s = set()
        for v in f.vertex_images[w]:
            s |= g.vertex_images[v]
        imgs.append(frozenset(s))
    return OmegaMorphism(f.source, g.target, em, imgs)


# ---------------------------------------------------------------------------
# Generating morphisms.

def edge_inclusion(tree, edge):
    "The morphism from the vertexless tree hitting one edge."
    if edge not in set(edges(tree)):
        raise ValueError("%r is not an edge" % (edge,))
    return OmegaMorphism(ETA, tree, {("leaf", 0): edge}, ())


def subtree_inclusion(tree, vset):
    "The outer-face composite embedding the subtree on vset."
    src, vmap = T.restrict_with_map(tree, vset)
    em = {("out", nw): ("out", old) for old, nw in vmap.items()}
    for p, e in enumerate(boundary_edge_list(tree, vset)):
        em[("leaf", p)] = e
    inv = {nw: old for old, nw in vmap.items()}
    imgs = [frozenset([inv[nw]]) for nw in range(len(inv))]
    return OmegaMorphism(src, tree, em, imgs)


def collapse_morphism(tree, vsets):
    """The inner-face composite collapsing each of the pairwise disjoint
    connected vertex sets to a single vertex of the source."""
    vsets = [frozenset(s) for s in vsets]
    src, vmap = T.collapse_with_map(tree, vsets)
    pre = {}
    for old, new in vmap.items():
        pre.setdefault(new, set()).add(old)
    n_old = T.num_vertices(tree)
    for old in range(n_old):
        if old not in vmap:
            raise AssertionError("collapse map must cover all vertices")
    em = {}
    imgs = []
    for new in range(T.num_vertices(src)):
        em[("out", new)] = ("out", T.subtree_root(tree, pre[new]))
        imgs.append(frozenset(pre[new]))
    for p in range(T.num_leaves(tree)):
        em[("leaf", p)] = ("leaf", p)
    return OmegaMorphism(src, tree, em, imgs)


def inner_face(tree, c):
    "The face contracting the output edge of the non-root vertex c."
    idx = T.index(tree)
    if c == 0 or not 0 <= c < idx.num_vertices():
        raise ValueError("need a non-root vertex")
    return collapse_morphism(tree, [{idx.parent[c], c}])


def outer_face(tree, v):
    """The face deleting a removable vertex v: either a top vertex with
    only leaf children, or the root when it has a single vertex child
    carrying all the leaves."""
    idx = T.index(tree)
    n = idx.num_vertices()
    keep = frozenset(range(n)) - {v}
    if not keep:
        raise ValueError("cannot delete the only vertex")
    if not T.is_connected(tree, keep):
        raise ValueError("vertex %d is not removable" % v)
    if v != 0 and any(kind == "v" for kind, _ in idx.child_entries[v]):
        raise ValueError("vertex %d is not removable" % v)
    if v == 0 and len(idx.vertex_children(0)) != 1:
        raise ValueError("the root is removable only over a single branch")
    if v == 0 and any(kind == "l" for kind, _ in idx.child_entries[0]):
        raise ValueError("deleting the root must not drop leaves")
    return subtree_inclusion(tree, keep)


def degeneracy(tree, v):
    "The morphism squashing the unary vertex v onto an edge."
    idx = T.index(tree)
    if idx.arity(v) != 1:
        raise ValueError("only unary vertices degenerate")

    def rec(u):
        if u == v:
            kind, ref = idx.child_entries[u][0]
            return ETA if kind == "l" else rec(ref)
        ch = []
        for kind, ref in idx.child_entries[u]:
            ch.append(ETA if kind == "l" else rec(ref))
        return PlanarTree(tuple(ch))

    tgt = rec(0)
    # removing a unary vertex keeps the depth-first order of the others
    vm, c = {}, 0
    for u in range(idx.num_vertices()):
        if u != v:
            vm[u] = c
            c += 1
    em = {}
    imgs = []
    for u in range(idx.num_vertices()):
        if u == v:
            kind, ref = idx.child_entries[v][0]
            em[("out", v)] = ("leaf", ref) if kind == "l" else ("out", vm[ref])
            imgs.append(frozenset())
        else:
            em[("out", u)] = ("out", vm[u])
            imgs.append(frozenset([vm[u]]))
    for p in range(T.num_leaves(tree)):
        em[("leaf", p)] = ("leaf", p) if not tgt.is_eta else ("leaf", 0)
    return OmegaMorphism(tree, tgt, em, imgs)


def isomorphisms(s, t):
    "All isomorphisms s -> t (possibly none)."
    if s.is_eta or t.is_eta:
        return [identity_omega(ETA)] if s.is_eta and t.is_eta else []
    idxS, idxT = T.index(s), T.index(t)
    if idxS.num_vertices() != idxT.num_vertices():
        return []

    def match(vs, vt):
        "Options (edge fragment, image fragment) matching vs onto vt."
        es, et = idxS.child_entries[vs], idxT.child_entries[vt]
        if len(es) != len(et):
            return []
        out = []
        for perm in itertools.permutations(range(len(et))):
            slot_opts = []
            ok = True
            for s_slot, t_slot in enumerate(perm):
                (ks, rs), (kt, rt) = es[s_slot], et[t_slot]
                if ks != kt:
                    ok = False
                    break
                if ks == "l":
                    slot_opts.append([({("leaf", rs): ("leaf", rt)}, {})])
                else:
                    sub = match(rs, rt)
                    if not sub:
                        ok = False
                        break
                    slot_opts.append(sub)
            if not ok:
                continue
            for combo in itertools.product(*slot_opts):
                em = {("out", vs): ("out", vt)}
                im = {vs: vt}
                for em2, im2 in combo:
                    em.update(em2)
                    im.update(im2)
                out.append((em, im))
        return out

    result = []
    for em, im in match(0, 0):
        imgs = [frozenset([im[v]]) for v in range(idxS.num_vertices())]
        result.append(OmegaMorphism(s, t, em, imgs))
    return sorted(set(result), key=lambda m: sorted(m.edge_map.items()))


# ---------------------------------------------------------------------------
# Enumeration.

def enumerate_morphisms(s, t, budget=200000, degeneracies=True):
    """Every morphism s -> t, by direct extensional search: pick the image
    of each vertex root-first and match boundary edges to input slots.
    Raises if more than `budget` candidates are generated."""
    if s.is_eta:
        return [edge_inclusion(t, e) for e in edges(t)]
    idxS = T.index(s)
    rooted = {}
    if not t.is_eta:
        for sub in T.enumerate_subtrees(t):
            r = T.subtree_root(t, sub.vertex_set)
            rooted.setdefault(r, []).append(sub.vertex_set)
    bnd_cache = {}

    def boundary(vset):
        if vset not in bnd_cache:
            bnd_cache[vset] = boundary_edge_list(t, vset)
        return bnd_cache[vset]

    count = [0]

    def rec(v, e):
        opts = []
        ents = idxS.child_entries[v]
        if degeneracies and len(ents) == 1:
            kind, ref = ents[0]
            if kind == "l":
                opts.append(({("out", v): e, ("leaf", ref): e},
                             {v: frozenset()}))
            else:
                for em2, im2 in rec(ref, e):
                    em = dict(em2)
                    em[("out", v)] = e
                    im = dict(im2)
                    im[v] = frozenset()
                    opts.append((em, im))
        if e[0] == "out":
            for vset in rooted.get(e[1], ()):
                bnd = boundary(vset)
                if len(bnd) != len(ents):
                    continue
                for perm in itertools.permutations(range(len(bnd))):
                    slot_opts = []
                    ok = True
                    for s_slot, (kind, ref) in enumerate(ents):
                        be = bnd[perm[s_slot]]
                        if kind == "l":
                            slot_opts.append([({("leaf", ref): be}, {})])
                        else:
                            sub = rec(ref, be)
                            if not sub:
                                ok = False
                                break
                            slot_opts.append(sub)
                    if not ok:
                        continue
                    for combo in itertools.product(*slot_opts):
                        em = {("out", v): e}
                        im = {v: frozenset(vset)}
                        for em2, im2 in combo:
                            em.update(em2)
                            im.update(im2)
                        opts.append((em, im))
                        count[0] += 1
                        if count[0] > budget:
                            raise RuntimeError("enumeration budget exceeded")
        return opts

    out = set()
    for e in edges(t):
        for em, im in rec(0, e):
            imgs = [im[v] for v in range(idxS.num_vertices())]
            out.add(OmegaMorphism(s, t, em, imgs))
    return sorted(out, key=lambda m: sorted(m.edge_map.items()))


def _connected_partitions(tree):
    "All partitions of the vertex set into connected blocks."
    if tree.is_eta:
        return [[]]
    idx = T.index(tree)
    rooted = {}
    for sub in T.enumerate_subtrees(tree):
        r = T.subtree_root(tree, sub.vertex_set)
        rooted.setdefault(r, []).append(sub.vertex_set)

    def rec(r):
        outs = []
        for block in rooted[r]:
            exits = [ref for v in block
                     for kind, ref in idx.child_entries[v]
                     if kind == "v" and ref not in block]
            for combo in itertools.product(*[rec(c) for c in exits]):
                outs.append([block] + [blk for part in combo for blk in part])
        return outs

    return rec(0)


def enumerate_face_morphisms(s, t):
    """Morphisms s -> t that are composites of inner and outer faces only
    (no isomorphisms, no degeneracies)."""
    out = set()
    if t.is_eta:
        return [identity_omega(ETA)] if s.is_eta else []
    if s.is_eta:
        return [edge_inclusion(t, e) for e in edges(t)]
    for sub in T.enumerate_subtrees(t):
        inc = subtree_inclusion(t, sub.vertex_set)
        for parts in _connected_partitions(inc.source):
            cm = collapse_morphism(inc.source, parts)
            if cm.source == s:
                out.add(compose_omega(inc, cm))
    return sorted(out, key=lambda m: sorted(m.edge_map.items()))


# ---------------------------------------------------------------------------
# The weighted thickening.

class OmegaTildeMorphism:
    """A tree morphism together with, for each source vertex, a weighted
    bracketing of its image (stored in target-vertex coordinates)."""

    __slots__ = ("base", "brackets")

    def __init__(self, base, brackets=None, validate=True):
        n = len(base.vertex_images)
        if brackets is None:
            brackets = [()] * n
        if len(brackets) != n:
            raise ValueError("need one bracket family per source vertex")
        canon = []
        for v in range(n):
            fam = brackets[v]
            items = []
            for vset, w in (fam.items() if isinstance(fam, dict) else fam):
                w = Fraction(w)
                if w == 0:
                    continue
                items.append((frozenset(vset), w))
            items.sort(key=lambda it: (len(it[0]), sorted(it[0])))
            canon.append(tuple(items))
        if validate:
            for v in range(n):
                _validate_brackets(base, v, canon[v])
        object.__setattr__(self, "base", base)
        object.__setattr__(self, "brackets", tuple(canon))

    def __setattr__(self, *a):
        raise AttributeError("morphisms are immutable")

    def weighted_bracketing(self, v):
        "The bracket family at v, on the restricted image tree."
        img = self.base.vertex_images[v]
        if not img:
            return WeightedBracketing(ETA, {})
        rt, vmap = T.restrict_with_map(self.base.target, img)
        return WeightedBracketing(
            rt, {frozenset(vmap[u] for u in B): w for B, w in self.brackets[v]})

    def __eq__(self, other):
        return (isinstance(other, OmegaTildeMorphism)
                and self.base == other.base and self.brackets == other.brackets)

    def __hash__(self):
        return hash((self.base, self.brackets))

    def __repr__(self):
        return "OmegaTildeMorphism(%r, %s)" % (
            self.base,
            [[(sorted(B), str(w)) for B, w in fam] for fam in self.brackets])


def _validate_brackets(base, v, fam):
    img = base.vertex_images[v]
    if fam and not img:
        raise ValueError("a degenerated vertex cannot carry brackets")
    sets = [B for B, _ in fam]
    if len(set(sets)) != len(sets):
        raise ValueError("duplicate bracket")
    for B, w in fam:
        if not 0 < w <= 1:
            raise ValueError("weight %s outside (0,1]" % w)
        if not B <= img or len(B) < 2 or B == img:
            raise ValueError("bracket must be a large proper subset of the image")
        if not T.is_connected(base.target, B):
            raise ValueError("bracket is not connected")
    for a, b in itertools.combinations(sets, 2):
        if not T.vsets_nested(a, b):
            raise ValueError("brackets are not nested")


def lift_omega(base):
    "The unbracketed thickened morphism over a plain one."
    return OmegaTildeMorphism(base)


def forget_omega_brackets(m):
    return m.base


def compose_omega_tilde(G, F):
    """Composite in the thickened category: the brackets over a source
    vertex w collect the images of G's brackets, the images of the
    middle corollas (weight 1, when large and proper), and the images
    of F's brackets (weights carried, when large and proper); set
    collisions keep the larger weight."""
    base = compose_omega(G.base, F.base)
    fams = []
    for w in range(len(F.base.vertex_images)):
        acc = {}

        def put(vset, t):
            if vset in acc:
                acc[vset] = max(acc[vset], t)
            else:
                acc[vset] = t

        img_w = base.vertex_images[w]
        for v in F.base.vertex_images[w]:
            for B, t in G.brackets[v]:
                put(B, t)
            gc = G.base.vertex_images[v]
            if len(gc) >= 2 and gc != img_w:
                put(gc, Fraction(1))
        for B, t in F.brackets[w]:
            imgB = frozenset(u2 for u in B for u2 in G.base.vertex_images[u])
            if len(imgB) >= 2 and imgB != img_w:
                put(imgB, t)
        fams.append(acc)
    return OmegaTildeMorphism(base, fams)


# ---------------------------------------------------------------------------
# Factorizations and the bracketing they induce.

def q_morphism(gs):
    """The thickened morphism assigned to a factorization [g_1, ..., g_n]
    (applied left to right): every intermediate corolla contributes the
    image of itself under the remaining composite, with weight 1, when
    that image is a large proper subset."""
    if not gs:
        raise ValueError("empty factorization")
    for a, b in zip(gs, gs[1:]):
        if a.target != b.source:
            raise ValueError("factorization is not composable")
    total = gs[0]
    for g in gs[1:]:
        total = compose_omega(g, total)
    # suffix composites g_n o ... o g_{l+1}
    suffixes = [identity_omega(gs[-1].target)]
    for g in reversed(gs[1:]):
        suffixes.append(compose_omega(suffixes[-1], g))
    suffixes.reverse()
    n_src = len(total.vertex_images)
    fams = [dict() for _ in range(n_src)]
    prefix = None
    for l, g in enumerate(gs[:-1]):
        prefix = g if prefix is None else compose_omega(g, prefix)
        suffix = suffixes[l]
        for v in range(n_src):
            img_v = total.vertex_images[v]
            for w in prefix.vertex_images[v]:
                S_w = suffix.vertex_images[w]
                if len(S_w) >= 2 and S_w < img_v:
                    fams[v][S_w] = Fraction(1)
    return OmegaTildeMorphism(total, fams)


def factorization_bracketing(gs, v):
    "The bracketing of the image of the corolla at v, on its own tree."
    return q_morphism(gs).weighted_bracketing(v).bracketing


# ---------------------------------------------------------------------------
# The nerve of an algebra handle.

def phi_object(P, tree):
    "Factor arities of the product assigned to a tree."
    if tree.is_eta:
        return ()
    return tuple(T.arities(tree))


def phi_morphism(P, m, values):
    """Pull values indexed by the target's vertices back along a thickened
    morphism: each source vertex acts by its bracketed image tree; a
    degenerated vertex yields the handle's unit."""
    base = m.base
    n = len(base.vertex_images)
    if len(values) != (0 if base.target.is_eta else T.num_vertices(base.target)):
        raise ValueError("values must be indexed by the target's vertices")
    if n == 0:
        return ()
    idxS = T.index(base.source)
    out = []
    for v in range(n):
        img = base.vertex_images[v]
        if not img:
            out.append(P.unit())
            continue
        rt, vmap = T.restrict_with_map(base.target, img)
        inv = {nw: old for old, nw in vmap.items()}
        k = len(img)
        bnd = boundary_edge_list(base.target, img)
        ins = [base.edge_map[e] for e in in_edges(idxS, v)]
        tau = tuple(bnd.index(e) for e in ins)
        wb = WeightedBracketing(
            rt, {frozenset(vmap[u] for u in B): w for B, w in m.brackets[v]})
        elem = BOElement(OElement(rt, tuple(range(k)), tau), wb)
        out.append(P.act(elem, [values[inv[j]] for j in range(k)]))
    return tuple(out)


def segal_check(P, tree, values=None, rng=None):
    """Recompute the corolla factors of a value tuple through the vertex
    inclusions and compare with plain re-indexing."""
    if tree.is_eta:
        raise ValueError("the vertexless tree has no Segal map")
    n = T.num_vertices(tree)
    if values is None:
        values = tuple(P.sample(a, rng) for a in T.arities(tree))
    for v in range(n):
        inc = lift_omega(subtree_inclusion(tree, {v}))
        if phi_morphism(P, inc, values) != (values[v],):
            return False
    return True


# ---------------------------------------------------------------------------
# Serialization.

def _edge_obj(e):
    return [e[0], e[1]]


def morphism_to_obj(g):
    return {"source": T.tree_to_obj(g.source),
            "target": T.tree_to_obj(g.target),
            "edges": sorted([_edge_obj(a), _edge_obj(b)]
                            for a, b in g.edge_map.items()),
            "vertices": [sorted(s) for s in g.vertex_images]}


def morphism_from_obj(obj):
    src = T.tree_from_obj(obj["source"])
    tgt = T.tree_from_obj(obj["target"])
    em = {(a[0], a[1]): (b[0], b[1]) for a, b in obj["edges"]}
    return OmegaMorphism(src, tgt, em, [frozenset(s) for s in obj["vertices"]])


def tilde_to_obj(m):
    obj = morphism_to_obj(m.base)
    obj["brackets"] = [[[sorted(B), T.frac_to_str(w)] for B, w in fam]
                       for fam in m.brackets]
    return obj


def tilde_from_obj(obj):
    base = morphism_from_obj(obj)
    fams = [[(frozenset(B), T.frac_from_str(w)) for B, w in fam]
            for fam in obj.get("brackets", [])]
    if not fams:
        return OmegaTildeMorphism(base)
    return OmegaTildeMorphism(base, fams)


def morphism_to_json(g):
    return json.dumps(morphism_to_obj(g), sort_keys=True, separators=(",", ":"))
