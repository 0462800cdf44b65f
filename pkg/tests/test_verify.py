import pytest

from kpq.combinatorics import StrictPartition
from kpq.verify import CRITERIA, SUITES, CriterionResult, VerifyConfig, arbitrate, run_cases, run_criterion, run_suite

SMALL = VerifyConfig(max_lambda=StrictPartition.of(2, 1), max_n=2)


def test_suites_cover_every_criterion():
    assert set(SUITES["all"]) == set(CRITERIA)
    named = [c for s, cs in SUITES.items() if s != "all" for c in cs]
    assert sorted(named) == sorted(CRITERIA)


@pytest.mark.parametrize("name", sorted(CRITERIA))
def test_small_criteria_pass(name):
    res = run_criterion(name, SMALL)
    assert res.passed, res.line()
    assert res.checked > 0


def test_result_line():
    res = CriterionResult("A2", "identity suite", True, 12, 0.5)
    assert res.line() == "A2 PASS identity suite: 12 checks in 0.5s (limit 30s)"
    bad = CriterionResult("A6", "divided differences", False, 3, 1.0, "x: y")
    assert bad.line().splitlines() == ["A6 FAIL divided differences: 3 checks in 1.0s", "    first failure: x: y"]
    assert bad.within_limit


def test_arbitration_notes():
    notes = arbitrate(SMALL)
    assert any("'odd-hat': passes" in n for n in notes)
    assert any("'even-hat': fails" in n for n in notes)
    assert any("'uniform': passes" in n for n in notes)


def test_wrong_conventions_fail():
    for cfg in (VerifyConfig(max_lambda=StrictPartition.of(2, 1), max_n=2, d_parity="even-hat"),
                VerifyConfig(max_lambda=StrictPartition.of(2, 1), max_n=2, wtb="plain")):
        res = run_criterion("A6", cfg)
        assert not res.passed
        assert res.failure


def test_crash_becomes_a_failure():
    def boom():
        raise RuntimeError("bad")

    assert run_cases([("ok", lambda: None, ()), ("crash", boom, ())]) == [None, "crash: RuntimeError: bad"]


def test_parallel_order_matches_serial():
    serial = run_suite("identities", SMALL)
    parallel = run_suite("identities", VerifyConfig(max_lambda=StrictPartition.of(2, 1), max_n=2, workers=2))
    assert [(r.name, r.passed, r.checked, r.failure) for r in serial] == [(r.name, r.passed, r.checked, r.failure) for r in parallel]


def test_worker_env(monkeypatch):
    monkeypatch.setenv("KPQ_MAX_WORKERS", "3")
    assert VerifyConfig().worker_count() == 3
    monkeypatch.setenv("KPQ_MAX_WORKERS", "junk")
    assert VerifyConfig().worker_count() == 1
    assert VerifyConfig(workers=2).worker_count() == 2
