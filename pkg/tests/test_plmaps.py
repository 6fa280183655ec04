from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from brackops.plmaps import (PLMap, monotone_reparam, identity_map,
                             pl_compose, pl_invert, pl_convex_combination,
                             average_of_steps, pl_to_obj, pl_from_obj)
from brackops import randomgen as R

F = Fraction


def test_validation():
    with pytest.raises(ValueError):
        PLMap((0, F(1, 2)), (0, 1))              # must end at 1
    with pytest.raises(ValueError):
        PLMap((0, F(1, 2), F(1, 2), 1), (0, 0, 1, 1))  # strictly increasing x
    with pytest.raises(ValueError):
        PLMap((0, F(1, 2), 1), (0, 1, F(1, 2)))  # decreasing values
    with pytest.raises(ValueError):
        monotone_reparam((0, F(1, 2), 1), (0, F(1, 2), F(3, 4)))  # endpoint


def test_canonical_form_merges_collinear():
    f = PLMap((0, F(1, 4), F(1, 2), 1), (0, F(1, 4), F(1, 2), 1))
    assert f == identity_map()
    assert len(f.breakpoints) == 2


def test_evaluation():
    f = PLMap((0, F(1, 2), 1), (0, F(1, 4), 1))
    assert f(0) == 0 and f(1) == 1
    assert f(F(1, 2)) == F(1, 4)
    assert f(F(3, 4)) == F(5, 8)


def test_compose_identity():
    f = monotone_reparam((0, F(1, 3), 1), (0, F(2, 3), 1))
    assert pl_compose(f, identity_map()) == f
    assert pl_compose(identity_map(), f) == f


def test_invert_roundtrip_fixed():
    f = monotone_reparam((0, F(1, 3), F(1, 2), 1), (0, F(1, 4), F(3, 4), 1))
    assert pl_compose(f, pl_invert(f)) == identity_map()
    assert pl_compose(pl_invert(f), f) == identity_map()


@given(st.integers(0, 10 ** 6))
def test_invert_roundtrip_random(seed):
    rng = R.rng_from_seed(seed)
    f = R.random_reparam(rng, points=3)
    assert pl_compose(f, pl_invert(f)) == identity_map()


@given(st.integers(0, 10 ** 6))
def test_compose_associative_random(seed):
    rng = R.rng_from_seed(seed)
    f, g, h = (R.random_reparam(rng, points=2) for _ in range(3))
    assert pl_compose(pl_compose(f, g), h) == pl_compose(f, pl_compose(g, h))


def test_compose_is_exact_pointwise():
    rng = R.rng_from_seed(7)
    f = R.random_reparam(rng, points=3)
    g = R.random_reparam(rng, points=3)
    fg = pl_compose(f, g)
    for r in range(21):
        t = F(r, 20)
        assert fg(t) == f(g(t))


def test_convex_combination():
    f = monotone_reparam((0, F(1, 2), 1), (0, F(1, 4), 1))
    g = monotone_reparam((0, F(1, 2), 1), (0, F(3, 4), 1))
    m = pl_convex_combination([F(1, 2), F(1, 2)], [f, g])
    assert m == identity_map()
    with pytest.raises(ValueError):
        pl_convex_combination([F(1, 2), F(1, 4)], [f, g])  # not convex


def test_average_of_steps_of_identity_partition():
    f = PLMap((0, F(1, 2), 1), (0, 1, 1))
    g = PLMap((0, F(1, 2), 1), (0, 0, 1))
    assert average_of_steps([f, g]) == identity_map()


def test_serialization_roundtrip():
    f = monotone_reparam((0, F(2, 7), 1), (0, F(5, 9), 1))
    assert pl_from_obj(pl_to_obj(f)) == f
    assert pl_to_obj(f)["x"] == ["0/1", "2/7", "1/1"]
