import random
from fractions import Fraction

import pytest

import glinf_qva.suites as suites
from glinf_qva.glinf_e import e_bracket
from glinf_qva.suites import SUITES, MAX_REPORTED_FAILURES, SuiteReport, UnknownSuite, run_suite

# small windows keep this file quick; the acceptance file runs the full ones
SMALL = {
    "f-cocycle": {"window": 3},
    "gl-jacobi": {"window": 1},
    "e-jacobi": {"window": 1, "samples": 20},
    "filtration": {"window": 2, "samples": 60},
    "lemma2.1": {"window": 2},
    "eq3.3": {"window": 1},
    "pbw-confluence": {"window": 1, "words": 30},
    "annihilation": {"window": 1, "vectors": 3},
    "thm3.10": {"window": 1, "rows": 1},
    "zoo-rep": {"window": 1, "vectors": 1},
    "prop5.2": {"window": 1, "order": 4, "vectors": 1, "rep_samples": 30},
    "recovery": {"window": 3, "samples": 30},
    "level-witness": {"vectors": 2},
    "strig-locality": {"window": 1},
}


def test_every_suite_has_a_small_config():
    assert set(SMALL) == set(SUITES)


@pytest.mark.parametrize("name", sorted(SUITES))
def test_suite_passes_small(name):
    report = run_suite(name, **SMALL[name])
    assert report.cases_run > 0
    assert report.passed, report.to_text()
    assert report.failures == [] and report.failure_count == 0


@pytest.mark.parametrize("level", [1, Fraction(-1, 2)])
def test_level_dependent_suites(level):
    for name in ("pbw-confluence", "annihilation", "thm3.10"):
        report = run_suite(name, level=level, **SMALL[name])
        assert report.passed, report.to_text()
        assert report.params["level"] == str(level)


def test_unknown_suite():
    with pytest.raises(UnknownSuite):
        run_suite("no-such-suite")


def test_negative_window_rejected():
    with pytest.raises(ValueError):
        run_suite("f-cocycle", window=-1)


def test_same_seed_same_report():
    a = run_suite("recovery", seed=3, window=3, samples=20)
    b = run_suite("recovery", seed=3, window=3, samples=20)
    assert a.to_json() == b.to_json()
    assert a.seed == 3 and '"seed": 3' in a.to_json()


def test_workers_do_not_change_report():
    one = run_suite("filtration", window=2, samples=40, workers=1)
    many = run_suite("filtration", window=2, samples=40, workers=3)
    assert one.to_json() == many.to_json()


def test_seed_changes_sampled_cases():
    a = suites._build_recovery(3, random.Random("1:recovery"), {"samples": 20})
    b = suites._build_recovery(3, random.Random("2:recovery"), {"samples": 20})
    assert a != b


def test_sabotaged_bracket_is_caught(monkeypatch):
    def broken(X, Y):
        return e_bracket(X, Y).scale(2)

    monkeypatch.setattr(suites, "e_bracket", broken)
    # doubling keeps antisymmetry and filtration, but not the representation property
    report = run_suite("pbw-confluence", window=1, words=5, workers=1)
    assert not report.passed
    assert report.failures[0]["case"].startswith("representation")


def test_failure_list_is_capped(monkeypatch):
    monkeypatch.setattr(suites, "f_fn", lambda m, n: Fraction(1))
    report = run_suite("f-cocycle", window=4, workers=1)
    assert report.failure_count == 9**3
    assert len(report.failures) == MAX_REPORTED_FAILURES
    assert "more failures" in report.to_text()


def test_report_serialization():
    r = SuiteReport("x", {"window": 1}, 0, 5)
    d = r.as_dict()
    assert d["passed"] and d["schema_version"] == suites.SCHEMA_VERSION
    assert "wall_time_s" not in d
    timed = run_suite("f-cocycle", window=1, timing=True)
    assert "wall_time_s" in timed.as_dict()
