"""End-to-end acceptance runs: one test per verification suite, at the
default configuration (seed 0, limit 6, 1000 samples), with the agreed
wall-clock budgets.  Everything is exact arithmetic; a failure report
carries the first counterexample found."""

import time
from fractions import Fraction

from brackops.trees import caterpillar, star
from brackops.bracketings import maximal_bracketings
from brackops.suites import RunConfig, run_suite, nonassoc_witness

F = Fraction


def timed(name, budget=None):
    cfg = RunConfig(seed=0, limit=6, samples=1000)
    t0 = time.perf_counter()
    report = run_suite(name, cfg)
    elapsed = time.perf_counter() - t0
    bad = [c for c in report["checks"] if not c["passed"]]
    assert report["passed"], "failing checks: %s" % (
        [(c["id"], c["counterexample"]) for c in bad],)
    if budget is not None:
        assert elapsed < budget, "%s took %.1fs (budget %ds)" % (
            name, elapsed, budget)
    return report


def test_maximal_bracketing_counts():
    t0 = time.perf_counter()
    assert [len(maximal_bracketings(caterpillar(n)))
            for n in (3, 4, 5)] == [2, 5, 14]
    assert len(maximal_bracketings(star(3))) == 6
    timed("bracket-counts")
    assert time.perf_counter() - t0 < 1


def test_bracketing_posets_are_contractible():
    timed("euler-characteristic", budget=30)


def test_bracketed_operad_axioms():
    timed("bo-associativity")


def test_edge_length_correspondence_roundtrip():
    timed("psi-roundtrip", budget=60)


def test_thickened_tree_morphism_composition():
    timed("omega-tilde", budget=60)


def test_nerve_is_functorial_and_segal():
    timed("nerve")


def test_cacti_embed_in_the_coend():
    timed("coend-embedding", budget=60)


def test_rescaling_identity():
    timed("rescaling")


def test_nonassociativity_witness():
    w = nonassoc_witness()
    assert w["distance"] == F(1, 4)
    assert w["left"].k == 4 and w["right"].k == 4
    assert w["left"] != w["right"]
    timed("nonassoc-witness")


def test_action_coherence_under_composition():
    timed("bo-action-coherence", budget=300)


def test_weight_zero_brackets_are_invisible():
    timed("weight-zero")
