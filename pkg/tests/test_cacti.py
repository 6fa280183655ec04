from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from brackops.plmaps import identity_map, pl_compose
from brackops.cacti import (Cactus, CactusError, EMPTY_CACTUS, unit_cactus,
                            MSElement, ms_unit, cactus_map, cactus_from_maps,
                            coend_compose, phi, cactus_metric, scaling_map,
                            relabel_cactus, cact1_compose, ms_compose,
                            gamma_cact1, rescaling_identity_check,
                            renormalize, cactus_to_json, cactus_from_json)
from brackops import randomgen as R

F = Fraction
HALVES = Cactus(2, [(0, F(1, 2), 1), (F(1, 2), 1, 2)])


def test_validation_rules():
    with pytest.raises(CactusError):
        Cactus(2, [(0, 1, 1)])                       # lobe 2 missing
    with pytest.raises(CactusError):
        Cactus(2, [(0, F(1, 3), 1), (F(1, 3), 1, 2)])  # unequal lengths
    with pytest.raises(CactusError):
        Cactus(2, [(0, F(1, 2), 1), (F(3, 4), 1, 2)])  # gap
    with pytest.raises(CactusError):
        # 1,2,1,2 pattern: the two lobes interleave
        Cactus(2, [(0, F(1, 4), 1), (F(1, 4), F(1, 2), 2),
                   (F(1, 2), F(3, 4), 1), (F(3, 4), 1, 2)])


def test_return_arcs_are_legal():
    x = Cactus(2, [(0, F(1, 4), 1), (F(1, 4), F(3, 4), 2), (F(3, 4), 1, 1)])
    assert len(x.arcs) == 3


def test_canonical_form_merges_adjacent_arcs():
    x = Cactus(2, [(0, F(1, 4), 1), (F(1, 4), F(1, 2), 1), (F(1, 2), 1, 2)])
    assert x == HALVES


def test_unit_cactus():
    u = unit_cactus()
    assert u.k == 1 and u.arcs == ((0, 1, 1),)
    assert EMPTY_CACTUS.k == 0


def test_cactus_map_step_shape():
    maps = cactus_map(HALVES)
    assert maps[0](F(1, 2)) == 1 and maps[0](F(1, 4)) == F(1, 2)
    assert maps[1](F(1, 2)) == 0 and maps[1](1) == 1


def test_cactus_from_maps_roundtrip():
    rng = R.rng_from_seed(0)
    for _ in range(40):
        x = R.random_cactus(rng.randint(1, 5), rng)
        assert cactus_from_maps(cactus_map(x)) == x


def test_metric_axioms():
    rng = R.rng_from_seed(1)
    for _ in range(30):
        x = R.random_cactus(3, rng)
        y = R.random_cactus(3, rng)
        assert cactus_metric(x, x) == 0
        assert cactus_metric(x, y) == cactus_metric(y, x)
        assert 0 <= cactus_metric(x, y) <= 1
        if x != y:
            assert cactus_metric(x, y) > 0


def test_scaling_map_identity_multipliers():
    x = HALVES
    assert scaling_map(x, (1, 1)) == identity_map()
    with pytest.raises(ValueError):
        scaling_map(x, (0, 1))


def test_scaling_map_doubles_a_lobe():
    g = scaling_map(HALVES, (2, 1))
    # lobe 1 takes 2/3 of the mass: [0,1/2] maps onto [0,2/3]
    assert g(F(1, 2)) == F(2, 3)


def test_relabel():
    y = relabel_cactus(HALVES, (2, 1))
    assert y == Cactus(2, [(0, F(1, 2), 2), (F(1, 2), 1, 1)])


def test_cact1_compose_worked_example():
    y = Cactus(3, [(0, F(1, 3), 1), (F(1, 3), F(2, 3), 2), (F(2, 3), 1, 3)])
    z = cact1_compose(HALVES, 1, y)
    assert z == Cactus(4, [(0, F(1, 4), 1), (F(1, 4), F(1, 2), 2),
                           (F(1, 2), F(3, 4), 3), (F(3, 4), 1, 4)])


def test_cact1_compose_unit_laws():
    rng = R.rng_from_seed(2)
    for _ in range(30):
        x = R.random_cactus(rng.randint(1, 4), rng)
        i = rng.randint(1, x.k)
        assert cact1_compose(x, i, unit_cactus()) == x
        assert cact1_compose(unit_cactus(), 1, x) == x


def test_nonassociativity_of_cact1():
    x = Cactus(2, [(0, F(1, 4), 1), (F(1, 4), F(3, 4), 2), (F(3, 4), 1, 1)])
    left = cact1_compose(cact1_compose(x, 1, HALVES), 1, HALVES)
    right = cact1_compose(x, 1, cact1_compose(HALVES, 1, HALVES))
    assert left != right
    assert cactus_metric(left, right) == F(1, 4)


def test_ms_compose_is_associative():
    rng = R.rng_from_seed(3)
    for _ in range(25):
        a = R.random_ms_element(rng.randint(1, 3), rng)
        i = rng.randint(1, a.cactus.k)
        b = R.random_ms_element(rng.randint(1, 3), rng)
        j = rng.randint(1, b.cactus.k)
        c = R.random_ms_element(rng.randint(1, 2), rng)
        lhs = ms_compose(ms_compose(a, i, b), i + j - 1, c)
        rhs = ms_compose(a, i, ms_compose(b, j, c))
        assert lhs == rhs


def test_phi_turns_ms_compose_into_coend_compose():
    rng = R.rng_from_seed(4)
    ts = [F(r, 24) for r in range(25)]
    for _ in range(20):
        a = R.random_ms_element(rng.randint(1, 3), rng)
        i = rng.randint(1, a.cactus.k)
        b = R.random_ms_element(rng.randint(1, 3), rng)
        lhs = phi(ms_compose(a, i, b))
        rhs = coend_compose(phi(a), i, phi(b))
        assert len(lhs) == len(rhs)
        for f, g in zip(lhs, rhs):
            assert all(f(t) == g(t) for t in ts)


def test_rescaling_identity():
    rng = R.rng_from_seed(5)
    for _ in range(40):
        k = rng.randint(1, 3)
        x = R.random_cactus(k, rng)
        ys = [R.random_cactus(rng.randint(1, 3), rng) for _ in range(k)]
        assert rescaling_identity_check(x, ys)


def test_renormalize_unit():
    assert renormalize(ms_unit()) == unit_cactus()


def test_json_roundtrip():
    rng = R.rng_from_seed(6)
    for _ in range(20):
        x = R.random_cactus(rng.randint(1, 4), rng)
        assert cactus_from_json(cactus_to_json(x)) == x


@given(st.integers(0, 10 ** 6))
def test_average_of_cactus_steps_is_identity(seed):
    from brackops.plmaps import average_of_steps
    rng = R.rng_from_seed(seed)
    x = R.random_cactus(rng.randint(1, 5), rng)
    assert average_of_steps(cactus_map(x)) == identity_map()
