from fractions import Fraction

import pytest

from brackops.trees import caterpillar
from brackops import trees as T
from brackops.operads import bo_element
from brackops.algebras import (TerminalAlgebra, EndoValue, endo_identity,
                               endo_compose, EndoAlgebra, CactusAlgebra)
from brackops import bo_action
from brackops import randomgen as R

F = Fraction

AND = EndoValue(2, (0, 0, 0, 1))
OR = EndoValue(2, (0, 1, 1, 1))
NOT = EndoValue(1, (1, 0))


def chain_elem(n, weights=()):
    t = caterpillar(n)
    return bo_element(t, tuple(range(n)), tuple(range(n + 1)), weights)


def test_endo_value_validation_and_call():
    with pytest.raises(ValueError):
        EndoValue(2, (0, 1))
    with pytest.raises(ValueError):
        EndoValue(1, (0, 2))
    assert AND((1, 1)) == 1 and AND((1, 0)) == 0
    assert NOT((0,)) == 1


def test_endo_compose_matches_substitution():
    f = endo_compose(OR, 1, AND)  # (a and b) or c
    for a in (0, 1):
        for b in (0, 1):
            for c in (0, 1):
                assert f((a, b, c)) == ((a and b) or c)


def test_endo_compose_unit_laws():
    rng = R.rng_from_seed(0)
    P = EndoAlgebra()
    for _ in range(20):
        f = P.sample(rng.randint(1, 3), rng)
        assert endo_compose(f, rng.randint(1, f.n), endo_identity()) == f
        assert endo_compose(endo_identity(), 1, f) == f


def test_endo_compose_associativity():
    rng = R.rng_from_seed(1)
    P = EndoAlgebra()
    for _ in range(20):
        f = P.sample(2, rng)
        g = P.sample(2, rng)
        h = P.sample(2, rng)
        assert endo_compose(endo_compose(f, 1, g), 1, h) == \
            endo_compose(f, 1, endo_compose(g, 1, h))
        assert endo_compose(endo_compose(f, 1, g), 3, h) == \
            endo_compose(endo_compose(f, 2, h), 1, g)


def test_endo_act_on_a_chain_is_iterated_composition():
    P = EndoAlgebra()
    got = P.act(chain_elem(2), [OR, AND])
    assert got == endo_compose(OR, 1, AND)


def test_endo_act_respects_tau():
    P = EndoAlgebra()
    t = caterpillar(2)
    e = bo_element(t, (0, 1), (2, 0, 1))
    got = P.act(e, [OR, AND])
    plain = endo_compose(OR, 1, AND)
    # tau sends argument label j to planar position tau[j]
    for word in range(8):
        args = [(word >> (2 - j)) & 1 for j in range(3)]
        assert got(args) == plain((args[1], args[2], args[0]))


def test_endo_act_ignores_brackets_and_weights():
    rng = R.rng_from_seed(2)
    P = EndoAlgebra()
    plain = chain_elem(3)
    decorated = chain_elem(3, {frozenset({1, 2}): F(1, 2)})
    for _ in range(10):
        xs = [P.sample(2, rng) for _ in range(3)]
        assert P.act(plain, xs) == P.act(decorated, xs)


def test_terminal_algebra():
    P = TerminalAlgebra()
    assert P.unit() == "*"
    assert P.act(chain_elem(2), ["*", "*"]) == "*"
    with pytest.raises(ValueError):
        P.act(chain_elem(2), ["*", "x"])


def test_cactus_algebra_is_the_bracketed_action():
    rng = R.rng_from_seed(3)
    P = CactusAlgebra()
    assert P.unit() == bo_action.unit_cactus()
    for _ in range(10):
        e = chain_elem(3, {frozenset({0, 1}): rng.choice((F(1), F(1, 2)))})
        xs = [P.sample(2, rng) for _ in range(3)]
        assert P.act(e, xs) == bo_action.lam(e, xs)


def test_cactus_sampling_needs_rng():
    P = CactusAlgebra()
    with pytest.raises(ValueError):
        P.sample(2)
