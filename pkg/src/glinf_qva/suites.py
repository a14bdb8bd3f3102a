"""Named verification suites and their reports.

A suite expands its parameters into a deterministic list of picklable cases,
then checks each case independently.  Cases can fan out over worker
processes (``GLINF_QVA_WORKERS``); results are reassembled in case order, so
reports do not depend on the worker count.
"""

from __future__ import annotations

import json
import os
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Any, Callable

from ._linear import as_fraction, format_fraction
from .glinf import E, GlInfElem, f_fn, gl_bracket, gl_degree, lemma_commutator_sides, psi_bilinear
from .glinf_e import EB, B, GlInfEElem, K, e_bracket, filtration_degree, jacobi_residual
from .identities import check_eq33, check_thm310
from .pbw import ModuleParams, PBWVector, gen_key, module_for, reduce_word
from .series import check_identity, ts_substitute_phi
from .zoo import (
    CInf, Ext, Sym, VSA, PreconditionError, ZooModule, ZooVector,
    lemma_sides_on_module, prop_bracket_sides, strig_locality_sides,
)

SCHEMA_VERSION = 1
MAX_REPORTED_FAILURES = 50


class UnknownSuite(KeyError):
    pass


@dataclass
class SuiteReport:
    suite: str
    params: dict
    seed: int
    cases_run: int
    failures: list[dict] = field(default_factory=list)
    failure_count: int = 0
    wall_time: float | None = None

    @property
    def passed(self) -> bool:
        return self.failure_count == 0

    def as_dict(self) -> dict:
        out = {
            "schema_version": SCHEMA_VERSION,
            "suite": self.suite,
            "params": self.params,
            "seed": self.seed,
            "cases_run": self.cases_run,
            "failure_count": self.failure_count,
            "failures": self.failures,
            "passed": self.passed,
        }
        if self.wall_time is not None:
            out["wall_time_s"] = round(self.wall_time, 3)
        return out

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), indent=2, sort_keys=True)

    def to_text(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        params = ", ".join(f"{k}={v}" for k, v in sorted(self.params.items()))
        lines = [f"{self.suite}: {status} ({self.cases_run} cases; {params}; seed={self.seed})"]
        if self.wall_time is not None:
            lines.append(f"  wall time {self.wall_time:.3f}s")
        for f in self.failures:
            lines.append(f"  case {f['case']}: expected {f['expected']}, got {f['actual']}")
        if self.failure_count > len(self.failures):
            lines.append(f"  ... {self.failure_count - len(self.failures)} more failures")
        return "\n".join(lines)


def _fail(case: str, expected: Any, actual: Any) -> dict:
    return {"case": case, "expected": str(expected), "actual": str(actual)}


def _identity_failure(case: str, report) -> dict | None:
    if report.passed:
        return None
    return _fail(f"{case} at exponent {report.exponent}", report.rhs, report.lhs)


# -- sampling ---------------------------------------------------------------

def _rand_q(rng: random.Random) -> Fraction:
    q = Fraction(rng.randint(-3, 3) or 1, rng.choice((1, 1, 2, 3)))
    return q


def sample_pbw(rng: random.Random, depth: int, rows=(-2, 2), modes=(-3, -1), terms: int = 3) -> PBWVector:
    """Random combination of canonical monomials of length ``<= depth``."""
    acc: dict = {}
    for _ in range(rng.randint(1, terms)):
        k = rng.randint(0, depth)
        gens = sorted(((rng.randint(*rows), rng.randint(*modes)) for _ in range(k)), key=gen_key)
        mono = tuple(gens)
        acc[mono] = acc.get(mono, 0) + _rand_q(rng)
    return PBWVector({k: v for k, v in acc.items() if v}) or PBWVector({(): 1})


ZOO_KINDS: tuple[ZooModule, ...] = (
    CInf(),
    Sym(2),
    Ext(2),
    VSA((0,), (Fraction(1, 2),)),
    VSA((-1, 2), (Fraction(1, 3), Fraction(-3, 2))),
)


def _zoo_label(module: ZooModule, rng: random.Random, lo: int, hi: int):
    if isinstance(module, CInf):
        return rng.randint(lo, hi)
    if isinstance(module, Sym):
        return tuple(sorted(rng.randint(lo, hi) for _ in range(module.r)))
    if isinstance(module, Ext):
        pool = list(range(lo, hi + 1))
        return tuple(sorted(rng.sample(pool, module.r)))
    offsets = tuple(rng.randint(-2, 2) for _ in module.S)
    pool = [i for i in range(lo, hi + 1) if i not in module.S]
    free = tuple(sorted(rng.choice(pool) for _ in range(rng.randint(0, 2))))
    return offsets, free


def sample_zoo(module: ZooModule, rng: random.Random, lo: int = -2, hi: int = 2, terms: int = 2) -> ZooVector:
    """A random nonzero vector built from a single homogeneous piece where relevant."""
    acc: dict = {}
    first = _zoo_label(module, rng, lo, hi)
    acc[first] = _rand_q(rng)
    for _ in range(rng.randint(0, terms - 1)):
        label = _zoo_label(module, rng, lo, hi)
        if isinstance(module, VSA):
            # stay in one homogeneous piece: same total degree as the first label
            if module.label_degree(label) != module.label_degree(first):
                continue
        acc[label] = acc.get(label, 0) + _rand_q(rng)
    return module.vector({k: v for k, v in acc.items() if v})


# -- case checkers ----------------------------------------------------------
# Each takes (ctx, case) and returns None or a failure dict.

def _case_f(ctx, case):
    m, n, r = case
    if f_fn(m, n) != -f_fn(n, m):
        return _fail(f"f antisymmetry ({m},{n})", -f_fn(n, m), f_fn(m, n))
    if f_fn(m, n) + f_fn(n, r) != f_fn(m, r):
        return _fail(f"f additivity ({m},{n},{r})", f_fn(m, r), f_fn(m, n) + f_fn(n, r))
    return None


def _case_gl(ctx, case):
    kind, idx = case
    els = [E(*ij) for ij in idx]
    if kind == "pair":
        a, b = els
        s = gl_bracket(a, b) + gl_bracket(b, a)
        if s:
            return _fail(f"antisymmetry {idx}", 0, s)
        c = gl_bracket(a, b)
        if c:
            da, db, dc = gl_degree(a), gl_degree(b), gl_degree(c)
            if dc != da + db:
                return _fail(f"grading {idx}", da + db, dc)
        return None
    a, b, c = els
    jac = gl_bracket(gl_bracket(a, b), c) + gl_bracket(gl_bracket(b, c), a) + gl_bracket(gl_bracket(c, a), b)
    if jac:
        return _fail(f"Jacobi {idx}", 0, jac)
    cyc = (
        psi_bilinear(gl_bracket(a, b, central=False), c)
        + psi_bilinear(gl_bracket(b, c, central=False), a)
        + psi_bilinear(gl_bracket(c, a, central=False), b)
    )
    if cyc:
        return _fail(f"cocycle {idx}", 0, cyc)
    return None


def _elem(encoded) -> GlInfEElem:
    terms, central = encoded
    return GlInfEElem(dict(terms), central)


def _encode(X: GlInfEElem):
    return (tuple(sorted(X.terms.items())), X.central)


def _case_e_jacobi(ctx, case):
    X, Y, Z = (_elem(s) for s in case)
    res = jacobi_residual(X, Y, Z)
    if res:
        return _fail(f"Jacobi ({X}, {Y}, {Z})", 0, res)
    return None


def _case_filtration(ctx, case):
    X, Y = (_elem(s) for s in case)
    br = e_bracket(X, Y)
    if br + e_bracket(Y, X):
        return _fail(f"antisymmetry ({X}, {Y})", 0, br + e_bracket(Y, X))
    lhs = filtration_degree(br)
    bound = filtration_degree(X) + filtration_degree(Y)
    if lhs < bound:
        return _fail(f"filtration ({X}, {Y})", f">= {bound}", lhs)
    if all(r >= 0 for (_, r, _) in X.terms) and all(r >= 0 for (_, r, _) in Y.terms) and br:
        return _fail(f"B+ abelian ({X}, {Y})", 0, br)
    return None


def _case_lemma21(ctx, case):
    m, n, lo, hi = case
    lhs, rhs = lemma_commutator_sides(m, n, lo, hi)
    return _identity_failure(f"lemma m={m} n={n}", check_identity(lhs, rhs, lo=(-hi, -hi), hi=(-lo, -lo)))


def _case_eq33(ctx, case):
    m, n, modes = case
    return _identity_failure(f"generating bracket m={m} n={n}", check_eq33(m, n, tuple(modes)))


def _params(ctx) -> ModuleParams:
    return ModuleParams.make(ctx["level"], ctx.get("lam") or {})


def _case_pbw(ctx, case):
    M = module_for(_params(ctx))
    kind = case[0]
    if kind == "rep":
        _, xs, ys, v = case
        X, Y = _elem(xs), _elem(ys)
        lhs = M.act(e_bracket(X, Y), v)
        rhs = M.act(X, M.act(Y, v)) - M.act(Y, M.act(X, v))
        if lhs != rhs:
            return _fail(f"representation X={X} Y={Y} v={v}", rhs, lhs)
        return None
    _, word = case
    letters = [B(m, r) for m, r in word]
    left = reduce_word(letters, M.params, "left")
    right = reduce_word(letters, M.params, "right")
    rec = M.apply_word(word)
    if left != right:
        return _fail(f"confluence {word}", left, right)
    if rec != left:
        return _fail(f"recursion vs rewriting {word}", left, rec)
    return None


def _case_annihilation(ctx, case):
    M = module_for(ModuleParams.make(ctx["level"]))
    kind, v = case[0], case[-1]
    if kind == "level":
        got = M.act(K, v)
        want = v.scale(M.level)
        return None if got == want else _fail(f"K on {v}", want, got)
    _, m, r, _ = case
    got = M.mode_apply(m, r, v)
    return None if not got else _fail(f"B({m},{r}) on {v}", 0, got)


def _case_thm310(ctx, case):
    M = module_for(ModuleParams.make(ctx["level"]))
    if case[0] == "composite":
        _, m, k, n = case
        got = M.composite_mode(m, k, n)
        return None if not got else _fail(f"b({m})_{k} b({n})", 0, got)
    _, m, n, v, modes = case
    return _identity_failure(f"commutator m={m} n={n} v={v}", check_thm310(M, m, n, v, tuple(modes)))


def _case_zoo_rep(ctx, case):
    kind = case[0]
    module: ZooModule = ZOO_KINDS[case[1]]
    if kind == "rep":
        _, _, a, b, w = case
        A, Bm = E(*a), E(*b)
        lhs = module.act_gl(gl_bracket(A, Bm).without_central(), w)
        rhs = module.act_gl(A, module.act_gl(Bm, w)) - module.act_gl(Bm, module.act_gl(A, w))
        if lhs != rhs:
            return _fail(f"{module.selector} rep {a} {b} on {module.format(w)}", module.format(rhs), module.format(lhs))
        out = module.act_gl(A, w)
        if out and not module.graded_pieces(out) <= module.graded_pieces(w):
            return _fail(f"{module.selector} grading {a} on {module.format(w)}",
                         sorted(module.graded_pieces(w)), sorted(module.graded_pieces(out)))
        return None
    _, _, m, n, w = case
    lhs, rhs = lemma_sides_on_module(module, m, n, w)
    return _identity_failure(f"{module.selector} lemma m={m} n={n} w={module.format(w)}",
                             check_identity(lhs, rhs))


def _case_prop52(ctx, case):
    kind = case[0]
    module: ZooModule = ZOO_KINDS[case[1]]
    if kind == "bracket":
        _, _, m, n, w, order = case
        lhs, rhs = prop_bracket_sides(module, m, n, w, order)
        return _identity_failure(f"{module.selector} Bbar bracket m={m} n={n} w={module.format(w)}",
                                 check_identity(lhs, rhs, hi=(order, order), order=order))
    _, _, xs, ys, w = case
    X, Y = _elem(xs), _elem(ys)
    lhs = module.act_e(e_bracket(X, Y), w)
    rhs = module.act_e(X, module.act_e(Y, w)) - module.act_e(Y, module.act_e(X, w))
    if lhs != rhs:
        return _fail(f"{module.selector} twisted rep X={X} Y={Y} w={module.format(w)}",
                     module.format(rhs), module.format(lhs))
    if all(c == 0 for (_, _, c) in X.terms):
        a, b = module.act_e(X, w), module.act_e_modes(X, w)
        if a != b:
            return _fail(f"{module.selector} residue vs modes X={X}", module.format(b), module.format(a))
    return None


def _case_recovery(ctx, case):
    _, idx, m, w, N = case
    module = ZOO_KINDS[idx]
    try:
        got = module.recover_E(m, w, N)
    except PreconditionError as exc:
        return _fail(f"{module.selector} recover m={m} N={N}", "solution", f"error: {exc}")
    for n in range(-N, N + 1):
        want = module.act_E(m, m + n, w)
        if got[n] != want:
            return _fail(f"{module.selector} recover m={m} n={n} w={module.format(w)}",
                         module.format(want), module.format(got[n]))
    return None


def _case_witness(ctx, case):
    _, idx, w = case
    module = ZOO_KINDS[idx]
    rep = module.level_witness(w)
    if not rep.level_zero:
        return _fail(f"{module.selector} witness on {module.format(w)} (m={rep.m}, n={rep.n})",
                     0, module.format(rep.forced_central))
    return None


def _case_strig(ctx, case):
    _, idx, m, n, w, k = case
    module = ZOO_KINDS[idx]
    lhs, rhs = strig_locality_sides(module, m, n, w, k)
    label = f"{module.selector} m={m} n={n} k={k} w={module.format(w)}"
    fail = _identity_failure(label, check_identity(lhs, rhs))
    if fail:
        return fail
    order = 3
    sl, sr = ts_substitute_phi(lhs, order), ts_substitute_phi(rhs, order)
    return _identity_failure(label + " after x1 = x2 e^x0", check_identity(sl, sr))


# -- case builders ----------------------------------------------------------

def _build_f(W, rng, opts):
    r = range(-W, W + 1)
    return list(product(r, r, r))


def _build_gl(W, rng, opts):
    basis = [(i, j) for i in range(-W, W + 1) for j in range(-W, W + 1)]
    cases = [("pair", (a, b)) for a in basis for b in basis]
    cases += [("triple", (a, b, c)) for a in basis for b in basis for c in basis]
    return cases


def _rand_elem(rng, rows, rmodes, rates, terms=2, central=True) -> GlInfEElem:
    X = GlInfEElem()
    for _ in range(rng.randint(1, terms)):
        X = X + EB(rng.randint(*rows), rng.randint(*rmodes), rng.randint(*rates), _rand_q(rng))
    if central and rng.random() < 0.2:
        X = X + K.scale(_rand_q(rng))
    return X


def _build_e_jacobi(W, rng, opts):
    rmodes = opts.get("modes", (-3, 2))
    gens = [_encode(B(m, r)) for m in range(-W, W + 1) for r in range(rmodes[0], rmodes[1] + 1)]
    cases = [(a, b, c) for a in gens for b in gens for c in gens]
    for _ in range(opts.get("samples", 200)):
        cases.append(tuple(_encode(_rand_elem(rng, (-W, W), (-3, 2), (-2, 2))) for _ in range(3)))
    return cases


def _build_filtration(W, rng, opts):
    cases = []
    for _ in range(opts.get("samples", 600)):
        X = _rand_elem(rng, (-W, W), (-4, 3), (-3, 3), terms=3)
        Y = _rand_elem(rng, (-W, W), (-4, 3), (-3, 3), terms=3)
        if X and Y:
            cases.append((_encode(X), _encode(Y)))
    for m, n, r, s in product(range(-2, 3), range(-2, 3), range(0, 3), range(0, 3)):
        cases.append((_encode(B(m, r)), _encode(B(n, s))))
    return cases


def _build_lemma21(W, rng, opts):
    M = opts.get("modes", W + 2)
    return [(m, n, -M, M) for m in range(-W, W + 1) for n in range(-W, W + 1)]


def _build_eq33(W, rng, opts):
    M = opts.get("modes", W + 1)
    return [(m, n, (-M, M)) for m in range(-W, W + 1) for n in range(-W, W + 1)]


def _build_pbw(W, rng, opts):
    rows = (-W, W)
    rmodes = opts.get("modes", (-3, 2))
    gens = [(m, r) for m in range(rows[0], rows[1] + 1) for r in range(rmodes[0], rmodes[1] + 1)]
    vectors = [sample_pbw(rng, opts.get("depth", 3), rows) for _ in range(opts.get("vectors", 3))]
    cases: list = []
    for a in gens:
        for b in gens:
            for v in vectors:
                cases.append(("rep", _encode(B(*a)), _encode(B(*b)), v))
    for _ in range(opts.get("words", 240)):
        cases.append(("word", tuple(rng.choice(gens) for _ in range(3))))
    return cases


def _build_annihilation(W, rng, opts):
    vectors = [sample_pbw(rng, 4, (-2, 2)) for _ in range(opts.get("vectors", 12))]
    cases: list = []
    for v in vectors:
        cases.append(("level", v))
        for m in range(-W, W + 1):
            for r in range(0, opts.get("top", 3) + 1):
                cases.append(("mode", m, r, v))
    return cases


def _build_thm310(W, rng, opts):
    M = opts.get("modes", W + 1)
    rows = opts.get("rows", 2)
    cases: list = []
    for m, k, n in product(range(-rows, rows + 1), range(0, 5), range(-rows, rows + 1)):
        cases.append(("composite", m, k, n))
    from .pbw import VACUUM, b_vector
    vectors = [VACUUM, b_vector(rng.randint(-rows, rows))]
    vectors += [sample_pbw(rng, 2, (-rows, rows), (-2, -1), 2) for _ in range(opts.get("vectors", 1))]
    for m in range(-rows, rows + 1):
        for n in range(-rows, rows + 1):
            for v in vectors:
                cases.append(("commutator", m, n, v, (-M, M)))
    return cases


def _zoo_vectors(rng, per_kind, lo=-2, hi=2):
    return [(i, sample_zoo(mod, rng, lo, hi)) for i, mod in enumerate(ZOO_KINDS) for _ in range(per_kind)]


def _build_zoo_rep(W, rng, opts):
    vecs = _zoo_vectors(rng, opts.get("vectors", 2))
    idx = range(-W, W + 1)
    basis = [(i, j) for i in idx for j in idx]
    cases: list = []
    for i, w in vecs:
        for a in basis:
            for b in basis:
                cases.append(("rep", i, a, b, w))
        for m in idx:
            for n in idx:
                cases.append(("lemma", i, m, n, w))
    return cases


def _build_prop52(W, rng, opts):
    order = opts.get("order", 8)
    cases: list = []
    kinds = [0, 1] + ([2, 3, 4] if opts.get("all_kinds", True) else [])
    for i in kinds:
        for _ in range(opts.get("vectors", 2)):
            w = sample_zoo(ZOO_KINDS[i], rng)
            for m in range(-W, W + 1):
                for n in range(-W, W + 1):
                    cases.append(("bracket", i, m, n, w, order))
    gens = [B(m, r) for m in range(-2, 3) for r in range(-3, 3)]
    for _ in range(opts.get("rep_samples", 300)):
        i = rng.randrange(len(ZOO_KINDS))
        w = sample_zoo(ZOO_KINDS[i], rng)
        if rng.random() < 0.7:
            X, Y = rng.choice(gens), rng.choice(gens)
        else:
            X = _rand_elem(rng, (-2, 2), (-3, 2), (-2, 2), central=False)
            Y = _rand_elem(rng, (-2, 2), (-3, 2), (-2, 2), central=False)
        cases.append(("rep", i, _encode(X), _encode(Y), w))
    return cases


def _build_recovery(W, rng, opts):
    cases: list = []
    for _ in range(opts.get("samples", 120)):
        i = rng.randrange(len(ZOO_KINDS))
        module = ZOO_KINDS[i]
        m = rng.randint(-2, 2)
        w = sample_zoo(module, rng)
        need = max((abs(n) for n in module.E_pairs(m, w)), default=0)
        if need > W:
            continue
        cases.append(("recover", i, m, w, rng.randint(need, W)))
    return cases


def _build_witness(W, rng, opts):
    return [("witness", i, w) for i, w in _zoo_vectors(rng, opts.get("vectors", 10))]


def _build_strig(W, rng, opts):
    cases: list = []
    for i, w in _zoo_vectors(rng, opts.get("vectors", 1)):
        for m in range(-W, W + 1):
            for n in range(-W, W + 1):
                for k in opts.get("powers", (0, 1, 2)):
                    cases.append(("strig", i, m, n, w, k))
    return cases


@dataclass(frozen=True)
class Suite:
    name: str
    build: Callable
    check: Callable
    default_window: int
    uses_level: bool
    summary: str


SUITES: dict[str, Suite] = {s.name: s for s in (
    Suite("f-cocycle", _build_f, _case_f, 10, False,
          "antisymmetry and additivity of f on [-W,W]^3"),
    Suite("gl-jacobi", _build_gl, _case_gl, 3, False,
          "Jacobi, 2-cocycle, antisymmetry and grading on basis elements with indices in [-W,W]"),
    Suite("e-jacobi", _build_e_jacobi, _case_e_jacobi, 2, False,
          "Jacobi on all ordered triples B(m,r), m in [-W,W], r in [-3,2], plus sampled mixed triples"),
    Suite("filtration", _build_filtration, _case_filtration, 4, False,
          "filtration inequality, antisymmetry and abelian B+ on sampled pairs"),
    Suite("lemma2.1", _build_lemma21, _case_lemma21, 4, False,
          "generating-function commutator vs basis bracket, m,n in [-W,W], modes [-W-2,W+2]"),
    Suite("eq3.3", _build_eq33, _case_eq33, 3, False,
          "closed-form twisted bracket vs exponential series oracle, m,n in [-W,W], modes [-W-1,W+1]"),
    Suite("pbw-confluence", _build_pbw, _case_pbw, 2, True,
          "representation property on basis pairs and confluence of 3-letter words"),
    Suite("annihilation", _build_annihilation, _case_annihilation, 3, True,
          "nonnegative modes kill V(level,0) vectors of depth <= 4; K acts by the level"),
    Suite("thm3.10", _build_thm310, _case_thm310, 3, True,
          "b(m)_k b(n) = 0 and the vertex-operator commutator on modes [-W-1,W+1]"),
    Suite("zoo-rep", _build_zoo_rep, _case_zoo_rep, 3, False,
          "representation property, grading and generating commutator on all module kinds"),
    Suite("prop5.2", _build_prop52, _case_prop52, 2, False,
          "Bbar bracket to total order 8 and the twisted-algebra action on module kinds"),
    Suite("recovery", _build_recovery, _case_recovery, 4, False,
          "Vandermonde recovery of E[m,m+n] w from Bbar modes, N <= W"),
    Suite("level-witness", _build_witness, _case_witness, 0, False,
          "forced central action is zero on sampled vectors of every kind"),
    Suite("strig-locality", _build_strig, _case_strig, 3, False,
          "trigonometric locality at level 0, with and without (x1-x2)^k and x1 = x2 e^x0"),
)}


def _run_chunk(args):
    name, ctx, start, cases = args
    check = SUITES[name].check
    out = []
    for offset, case in enumerate(cases):
        fail = check(ctx, case)
        if fail is not None:
            out.append((start + offset, fail))
    return out


def worker_count() -> int:
    raw = os.environ.get("GLINF_QVA_WORKERS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def run_suite(
    name: str,
    window: int | None = None,
    level: Any = 0,
    seed: int = 0,
    workers: int | None = None,
    timing: bool = False,
    **opts,
) -> SuiteReport:
    """Run a named suite; extra keyword options override case-generation knobs."""
    if name not in SUITES:
        raise UnknownSuite(name)
    suite = SUITES[name]
    W = suite.default_window if window is None else window
    if W < 0:
        raise ValueError("window must be nonnegative")
    level_q = as_fraction(level)
    rng = random.Random(f"{seed}:{name}")
    t0 = time.perf_counter()
    cases = suite.build(W, rng, opts)
    ctx = {"level": level_q}
    workers = worker_count() if workers is None else workers
    if workers > 1 and len(cases) > 1:
        size = max(1, -(-len(cases) // (workers * 4)))
        chunks = [(name, ctx, i, cases[i:i + size]) for i in range(0, len(cases), size)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = [f for part in pool.map(_run_chunk, chunks) for f in part]
    else:
        results = _run_chunk((name, ctx, 0, cases))
    results.sort(key=lambda t: t[0])
    params = {"window": W}
    if suite.uses_level:
        params["level"] = format_fraction(level_q)
    for k, v in sorted(opts.items()):
        params[k] = list(v) if isinstance(v, tuple) else v
    return SuiteReport(
        suite=name,
        params=params,
        seed=seed,
        cases_run=len(cases),
        failures=[f for _, f in results[:MAX_REPORTED_FAILURES]],
        failure_count=len(results),
        wall_time=time.perf_counter() - t0 if timing else None,
    )
