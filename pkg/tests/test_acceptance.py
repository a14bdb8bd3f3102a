"""The fourteen acceptance criteria, each run at its full stated size.

Every test prints one ``[PASS]``/``[FAIL] criterion N: ...`` line to the
terminal (outside pytest's capture) before asserting.
"""

import os
import random
import subprocess
import sys
import time
from fractions import Fraction

import pytest

from glinf_qva.exppoly import ExpPoly
from glinf_qva.glinf import GlInfElem
from glinf_qva.glinf_e import EB, GlInfEElem, K
from glinf_qva.grammar import (
    parse_exppoly, parse_gl, parse_gl_e, parse_module, parse_pbw, parse_zoo_vector,
)
from glinf_qva.suites import ZOO_KINDS, run_suite, sample_pbw, sample_zoo

LEVELS = [0, 1, 2, Fraction(-1, 2)]


@pytest.fixture
def announce(capsys):
    def emit(number, ok, detail):
        with capsys.disabled():
            print(f"\n[{'PASS' if ok else 'FAIL'}] criterion {number}: {detail}")
        return ok
    return emit


def timed(name, **kw):
    t0 = time.perf_counter()
    report = run_suite(name, **kw)
    return report, time.perf_counter() - t0


def _summary(report, elapsed, limit=None):
    text = f"{report.suite} {report.cases_run} cases, {report.failure_count} failures, {elapsed:.2f}s"
    if limit is not None:
        text += f" (limit {limit}s)"
    return text


def test_criterion_01_f_laws(announce):
    report, elapsed = timed("f-cocycle", window=10)
    ok = report.passed and report.cases_run == 9261 and elapsed < 1.0
    assert announce(1, ok, _summary(report, elapsed, 1)), report.to_text()


def test_criterion_02_gl_jacobi_and_cocycle(announce):
    report, elapsed = timed("gl-jacobi", window=3)
    ok = report.passed and elapsed < 30
    assert announce(2, ok, _summary(report, elapsed, 30)), report.to_text()


def test_criterion_03_generating_commutator(announce):
    report, elapsed = timed("lemma2.1", window=4, modes=6)
    ok = report.passed and report.cases_run == 81 and elapsed < 10
    assert announce(3, ok, _summary(report, elapsed, 10)), report.to_text()


def test_criterion_04_twisted_jacobi(announce):
    report, elapsed = timed("e-jacobi", window=2, modes=(-3, 2))
    ok = report.passed and report.cases_run >= 30**3 and elapsed < 60
    assert announce(4, ok, _summary(report, elapsed, 60)), report.to_text()


def test_criterion_05_closed_form_vs_series(announce):
    report, elapsed = timed("eq3.3", window=3, modes=4)
    ok = report.passed and report.cases_run == 49
    assert announce(5, ok, _summary(report, elapsed)), report.to_text()


def test_criterion_06_filtration(announce):
    report, elapsed = timed("filtration")
    ok = report.passed and report.cases_run >= 500
    assert announce(6, ok, _summary(report, elapsed)), report.to_text()


def test_criterion_07_pbw_engine(announce):
    t0 = time.perf_counter()
    reports = []
    for level in LEVELS:
        reports.append(run_suite("pbw-confluence", window=2, level=level, words=240))
        reports.append(run_suite("annihilation", level=level))
    elapsed = time.perf_counter() - t0
    # 30 generators squared times 3 vectors for the representation property, then the words
    words = [r.cases_run - 30 * 30 * 3 for r in reports[::2]]
    ok = all(r.passed for r in reports) and min(words) >= 200 and elapsed < 120
    cases = sum(r.cases_run for r in reports)
    failures = sum(r.failure_count for r in reports)
    detail = f"pbw-confluence + annihilation at levels 0, 1, 2, -1/2: {cases} cases, {failures} failures, {elapsed:.2f}s (limit 120s)"
    assert announce(7, ok, detail), "\n".join(r.to_text() for r in reports if not r.passed)


def test_criterion_08_vertex_relations(announce):
    reports = [run_suite("thm3.10", window=3, level=level) for level in LEVELS]
    ok = all(r.passed for r in reports)
    cases = sum(r.cases_run for r in reports)
    detail = f"thm3.10 at levels 0, 1, 2, -1/2 on modes [-4,4]: {cases} cases, {sum(r.failure_count for r in reports)} failures"
    assert announce(8, ok, detail), "\n".join(r.to_text() for r in reports if not r.passed)


def test_criterion_09_zoo_representation(announce):
    report, elapsed = timed("zoo-rep", window=3)
    ok = report.passed
    assert announce(9, ok, _summary(report, elapsed)), report.to_text()


def test_criterion_10_bbar_bracket(announce):
    report, elapsed = timed("prop5.2", order=8)
    ok = report.passed
    assert announce(10, ok, _summary(report, elapsed)), report.to_text()


def test_criterion_11_recovery(announce):
    report, elapsed = timed("recovery", window=4)
    ok = report.passed and report.cases_run >= 100
    assert announce(11, ok, _summary(report, elapsed)), report.to_text()


def test_criterion_12_level_witness(announce):
    report, elapsed = timed("level-witness")
    ok = report.passed
    assert announce(12, ok, _summary(report, elapsed)), report.to_text()


def test_criterion_13_trig_locality(announce):
    report, elapsed = timed("strig-locality", window=3, powers=(0, 1, 2))
    ok = report.passed
    assert announce(13, ok, _summary(report, elapsed)), report.to_text()


def _cli(argv, workers):
    env = dict(os.environ, GLINF_QVA_WORKERS=str(workers))
    proc = subprocess.run([sys.executable, "-m", "glinf_qva.cli", *argv], env=env,
                          capture_output=True, check=False)
    return proc.returncode, proc.stdout


def _round_trip_sweep(seed=2024, count=300):
    rng = random.Random(seed)
    bad = []

    def check(label, text, parse, show):
        if show(parse(text)) != text:
            bad.append((label, text))

    for _ in range(count):
        gl = GlInfElem({(rng.randint(-9, 9), rng.randint(-9, 9)): Fraction(rng.randint(-4, 4), rng.randint(1, 5))
                        for _ in range(rng.randint(0, 4))}, Fraction(rng.randint(-2, 2), rng.randint(1, 3)))
        check("glinf", str(gl), parse_gl, str)
        ge = GlInfEElem()
        for _ in range(rng.randint(0, 4)):
            ge = ge + EB(rng.randint(-5, 5), rng.randint(-5, 5), rng.randint(-3, 3),
                         Fraction(rng.randint(-4, 4), rng.randint(1, 5)))
        ge = ge + K.scale(Fraction(rng.randint(-1, 1), 2))
        check("glinf-e", str(ge), parse_gl_e, str)
        ep = ExpPoly({(rng.randint(-4, 4), rng.randint(-3, 3)): Fraction(rng.randint(-4, 4), rng.randint(1, 4))
                      for _ in range(rng.randint(0, 3))})
        check("exppoly", str(ep), parse_exppoly, str)
        v = sample_pbw(rng, rng.randint(0, 4))
        check("pbw", str(v), parse_pbw, str)
        module = rng.choice(ZOO_KINDS)
        w = sample_zoo(module, rng, terms=3)
        check(module.selector, module.format(w), lambda t, m=module: parse_zoo_vector(m, t), module.format)
        check("selector", module.selector, parse_module, lambda m: m.selector)
    return bad


def test_criterion_14_cli_determinism_and_round_trips(announce):
    commands = [
        ["verify", "e-jacobi", "--window", "1", "--seed", "7", "--format", "json"],
        ["verify", "recovery", "--window", "3", "--seed", "11", "--format", "json"],
        ["verify", "thm3.10", "--window", "1", "--level", "-1/2", "--format", "json"],
        ["bracket", "glinf-e", "B[0,-1]", "B[1,-1]", "--format", "json"],
        ["vacuum", "B[1,-1] B[0,-1]", "--level", "2", "--format", "json"],
        ["module", "ext:2", "witness", "--vector", "v[0]^v[1]", "--format", "json"],
    ]
    mismatched = []
    for argv in commands:
        runs = [_cli(argv, 1), _cli(argv, 1), _cli(argv, 4)]
        if runs[0][0] != 0 or not runs[0][1] or any(r != runs[0] for r in runs[1:]):
            mismatched.append(" ".join(argv[:2]))
    bad = _round_trip_sweep()
    ok = not mismatched and not bad
    detail = (f"{len(commands)} CLI commands byte-identical across repeats and worker counts"
              f" (mismatched: {mismatched or 'none'}); round-trip sweep {len(bad)} failures")
    assert announce(14, ok, detail), (mismatched, bad[:5])
