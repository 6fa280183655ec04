import pytest
from hypothesis import given, strategies as st

from brackops import trees as T
from brackops.trees import (ETA, PlanarTree, caterpillar, corolla, star,
                            num_leaves, num_vertices)
from brackops import randomgen as R


def test_eta_is_vertexless():
    assert ETA.is_eta
    assert num_vertices(ETA) == 0
    assert num_leaves(ETA) == 1


def test_corolla_counts():
    for n in range(0, 5):
        t = corolla(n)
        assert num_vertices(t) == 1
        assert num_leaves(t) == n


def test_caterpillar_shape():
    t = caterpillar(4)
    assert num_vertices(t) == 4
    assert num_leaves(t) == 5
    assert T.arities(t) == [2, 2, 2, 2]


def test_star_shape():
    t = star(3)
    assert num_vertices(t) == 4
    assert T.arities(t) == [3, 1, 1, 1]


def test_structural_equality_and_hash():
    a = PlanarTree((ETA, PlanarTree((ETA, ETA))))
    b = PlanarTree((ETA, PlanarTree((ETA, ETA))))
    c = PlanarTree((PlanarTree((ETA, ETA)), ETA))
    assert a == b and hash(a) == hash(b)
    assert a != c


def test_index_parent_child_tables():
    t = caterpillar(3)
    idx = T.index(t)
    assert idx.num_vertices() == 3
    assert idx.arity(0) == 2
    # vertex i+1 is the first child of vertex i along the spine
    for v in range(2):
        kinds = [k for k, _ in idx.child_entries[v]]
        assert kinds == ["v", "l"]


def test_planar_tree_enumeration_catalan():
    # one-vertex trees with n leaves: exactly the corolla
    for n in range(0, 4):
        assert T.planar_trees(1, n) == [corolla(n)]
    # all-binary trees on n vertices have n+1 leaves and Catalan count
    assert len(T.planar_trees(3, 4)) >= 5
    binary = [t for t in T.planar_trees(3, 4) if T.arities(t) == [2, 2, 2]]
    assert len(binary) == 5


def test_substitute_inverse_of_restrict():
    t = caterpillar(3)
    res = T.substitute_with_maps(t, 1, corolla(2))
    assert res.tree == t
    assert sorted(set(res.vmap_host.values()) | {res.vmap_guest[0]}) == [0, 1, 2]


def test_graft_leaf_count():
    t = T.graft(corolla(2), 1, corolla(3))
    assert num_vertices(t) == 2
    assert num_leaves(t) == 4


def test_restrict_and_collapse_roundtrip_sizes():
    t = caterpillar(4)
    sub = T.restrict(t, {1, 2})
    assert num_vertices(sub) == 2
    ct, cmap = T.collapse_with_map(t, [frozenset({1, 2})])
    assert num_vertices(ct) == 3
    assert cmap[1] == cmap[2]


def test_subtree_root_and_leaf_count():
    t = caterpillar(4)
    assert T.subtree_root(t, {1, 2}) == 1
    # spine edge below plus one side leaf per vertex
    assert T.subtree_leaf_count(t, {1, 2}) == 3


def test_is_connected():
    t = caterpillar(4)
    assert T.is_connected(t, {1, 2})
    assert not T.is_connected(t, {0, 2})


def test_enumerate_subtrees_connected():
    t = star(3)
    subs = T.enumerate_subtrees(t, 2)
    assert all(T.is_connected(t, s.vertex_set) for s in subs)
    assert all(0 in s.vertex_set for s in subs)  # arms only meet at the root


def test_json_roundtrip_fixed():
    t = PlanarTree((corolla(2), ETA, corolla(0)))
    assert T.tree_from_json(T.tree_to_json(t)) == t
    assert T.tree_from_json(T.tree_to_json(ETA)) == ETA


@given(st.integers(0, 10 ** 6))
def test_json_roundtrip_random(seed):
    rng = R.rng_from_seed(seed)
    t = R.random_planar_tree(rng, max_vertices=5, max_leaves=6)
    assert T.tree_from_json(T.tree_to_json(t)) == t


def test_malformed_json_rejected():
    with pytest.raises(ValueError):
        T.tree_from_obj("leaf")
    with pytest.raises(ValueError):
        T.tree_from_obj({"tree": []})


def test_frac_str_roundtrip():
    from fractions import Fraction
    q = Fraction(22, 7)
    assert T.frac_from_str(T.frac_to_str(q)) == q
