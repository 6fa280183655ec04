from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from brackops.trees import ETA, PlanarTree, caterpillar, corolla
from brackops import trees as T
from brackops.operads import (OElement, BOElement, o_unit, eta_element,
                              unit_BO, eta_BO, bo_element, compose_O,
                              compose_BO, sigma_act_O, tau_act_O,
                              sigma_act_BO, forget_brackets, bo_to_json,
                              bo_from_json)
from brackops import randomgen as R


def chain_elem(n, weights=()):
    t = caterpillar(n)
    return bo_element(t, tuple(range(n)), tuple(range(n + 1)), weights)


def test_bad_labellings_rejected():
    t = caterpillar(2)
    with pytest.raises(ValueError):
        OElement(t, (0, 0), (0, 1, 2))
    with pytest.raises(ValueError):
        OElement(t, (0, 1), (0, 1))


def test_unit_laws_O():
    a = OElement(caterpillar(2), (0, 1), (2, 0, 1))
    for i in (1, 2):
        assert compose_O(a, i, o_unit(a.slot_arity(i))) == a
    assert compose_O(o_unit(a.leaf_count), 1, a) == a


def unary_chain(n):
    """A chain of n vertices ending in an arity-1 vertex; every other
    vertex has one side leaf."""
    t = PlanarTree((ETA,))
    for _ in range(n - 1):
        t = PlanarTree((t, ETA))
    return t


def test_eta_composition_removes_slot():
    a = OElement(corolla(1), (0,), (0,))
    res = compose_O(a, 1, eta_element())
    # substituting the vertexless tree at the only vertex leaves eta
    assert res.tree.is_eta


def test_sequential_associativity_O():
    rng = R.rng_from_seed(1)
    for _ in range(50):
        a = R.random_o_element(rng, max_vertices=3)
        if a.arity == 0:
            continue
        i = rng.randint(1, a.arity)
        b = R.random_o_element(rng, max_vertices=2,
                               max_leaves=a.slot_arity(i))
        while b.leaf_count != a.slot_arity(i):
            b = R.random_o_element(rng, max_vertices=2,
                                   max_leaves=max(a.slot_arity(i), 1))
        if b.arity == 0:
            continue
        j = rng.randint(1, b.arity)
        c = o_unit(b.slot_arity(j))
        lhs = compose_O(compose_O(a, i, b), i + j - 1, c)
        rhs = compose_O(a, i, compose_O(b, j, c))
        assert lhs == rhs


def test_sigma_tau_are_actions():
    a = OElement(caterpillar(3), (2, 0, 1), (1, 0, 3, 2))
    p = (1, 2, 0)
    q = (2, 0, 1)
    pq = tuple(p[q[i]] for i in range(3))
    assert sigma_act_O(q, sigma_act_O(p, a)) == sigma_act_O(pq, a)
    assert sigma_act_O((0, 1, 2), a) == a
    r = (3, 2, 1, 0)
    assert tau_act_O((0, 1, 2, 3), a) == a
    assert tau_act_O(r, tau_act_O(r, a)) == a


def guest2():
    "An unbracketed 2-vertex element with 2 leaves."
    t = PlanarTree((PlanarTree((ETA,)), ETA))
    return bo_element(t, (0, 1), (0, 1))


def test_compose_BO_creates_weight_one_bracket():
    a = chain_elem(2)
    res = compose_BO(a, 1, guest2())
    assert dict(res.weighted.weights) == {frozenset({0, 1}): Fraction(1)}


def test_compose_BO_whole_tree_bracket_is_dropped():
    # substituting into the only vertex: the guest set is everything
    res = compose_BO(unit_BO(2), 1, guest2())
    assert res.weighted.weights == ()


def test_compose_BO_eta_into_small_bracket_discards():
    t = unary_chain(3)
    a = bo_element(t, (0, 1, 2), (0, 1, 2),
                   {frozenset({1, 2}): Fraction(1, 2)})
    res = compose_BO(a, 3, eta_BO())
    # the surviving bracket would be a single vertex: dropped
    assert res.weighted.weights == ()


def test_compose_BO_bracket_absorbs_guest():
    a = chain_elem(3, {frozenset({1, 2}): Fraction(1, 2)})
    res = compose_BO(a, 2, guest2())
    w = dict(res.weighted.weights)
    assert w == {frozenset({1, 2, 3}): Fraction(1, 2),
                 frozenset({1, 2}): Fraction(1)}


def test_compose_BO_collision_keeps_larger_weight():
    t = unary_chain(4)
    a = bo_element(t, (0, 1, 2, 3), (0, 1, 2, 3),
                   {frozenset({1, 2}): Fraction(1, 3),
                    frozenset({1, 2, 3}): Fraction(1, 2)})
    res = compose_BO(a, 4, eta_BO())
    # {1,2,3} shrinks onto the existing {1,2}: the larger weight wins
    assert dict(res.weighted.weights) == {frozenset({1, 2}): Fraction(1, 2)}


def test_unit_laws_BO():
    rng = R.rng_from_seed(2)
    for _ in range(30):
        a = R.random_bo_element(rng, max_vertices=3)
        assert compose_BO(unit_BO(a.leaf_count), 1, a) == a
        for i in range(1, a.arity + 1):
            assert compose_BO(a, i, unit_BO(a.slot_arity(i))) == a


def test_sigma_act_BO_is_an_action():
    rng = R.rng_from_seed(3)
    for _ in range(30):
        a = R.random_bo_element(rng, max_vertices=3)
        if a.arity < 2:
            continue
        p = tuple(R.random_permutation(rng, a.arity))
        q = tuple(R.random_permutation(rng, a.arity))
        pq = tuple(p[q[i]] for i in range(a.arity))
        assert sigma_act_BO(q, sigma_act_BO(p, a)) == sigma_act_BO(pq, a)
        assert sigma_act_BO(tuple(range(a.arity)), a) == a
        assert forget_brackets(sigma_act_BO(p, a)) == \
            sigma_act_O(p, forget_brackets(a))


def test_json_roundtrip():
    rng = R.rng_from_seed(4)
    for _ in range(20):
        a = R.random_bo_element(rng, max_vertices=4)
        assert bo_from_json(bo_to_json(a)) == a


@given(st.integers(0, 10 ** 6))
def test_forget_brackets_is_operad_map(seed):
    rng = R.rng_from_seed(seed)
    a = R.random_bo_element(rng, max_vertices=3)
    if a.arity == 0:
        return
    i = rng.randint(1, a.arity)
    b = R.random_bo_element(rng, max_vertices=2, max_leaves=6)
    if b.leaf_count != a.slot_arity(i):
        return
    lhs = forget_brackets(compose_BO(a, i, b))
    rhs = compose_O(forget_brackets(a), i, forget_brackets(b))
    assert lhs == rhs
