import pytest

from brackops.suites import SUITES, RunConfig, run_suite


def test_unknown_suite_raises():
    with pytest.raises(KeyError):
        run_suite("no-such-suite")


def test_bad_config_rejected():
    with pytest.raises(ValueError):
        RunConfig(limit=0)
    with pytest.raises(ValueError):
        RunConfig(samples=0)


def test_report_schema():
    cfg = RunConfig(seed=3, limit=5, samples=40)
    report = run_suite("bracket-counts", cfg)
    assert report["suite"] == "bracket-counts"
    assert report["seed"] == 3
    assert report["limit"] == 5
    assert report["samples"] == 40
    assert report["passed"] is True
    ids = [c["id"] for c in report["checks"]]
    assert ids == sorted(ids)
    for c in report["checks"]:
        assert set(c) == {"id", "count", "passed", "counterexample"}
        assert c["count"] >= 1
        assert c["counterexample"] is None


def test_fast_suites_pass():
    cfg = RunConfig(samples=30)
    for name in ("nonassoc-witness", "omega-tilde", "weight-zero"):
        assert run_suite(name, cfg)["passed"]


def test_reports_are_deterministic():
    cfg = RunConfig(seed=11, samples=25)
    a = run_suite("weight-zero", cfg)
    b = run_suite("weight-zero", RunConfig(seed=11, samples=25))
    assert a == b


def test_registry_matches_run_all():
    assert set(SUITES) == {
        "bracket-counts", "euler-characteristic", "bo-associativity",
        "psi-roundtrip", "omega-tilde", "nerve", "coend-embedding",
        "rescaling", "nonassoc-witness", "bo-action-coherence",
        "weight-zero"}
