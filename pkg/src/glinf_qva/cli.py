"""glinf-qva: one-shot computations and verification suites.

Exit codes: 0 success, 1 a verification suite found failures, 2 bad input
(parse errors, unknown suites, shape mismatches, violated preconditions).
"""

from __future__ import annotations

import argparse
import json
import re
import sys

from . import grammar
from ._linear import format_fraction
from .glinf import gl_bracket
from .glinf_e import e_bracket
from .pbw import VACUUM, module_for
from .series import TruncSeries
from .suites import SCHEMA_VERSION, SUITES, run_suite
from .zoo import PreconditionError, ShapeMismatch, ZooModule


class InputError(Exception):
    pass


def _emit(args, payload: dict, text: str) -> None:
    if args.format == "json":
        doc = {"schema_version": SCHEMA_VERSION, **payload}
        print(json.dumps(doc, indent=2, sort_keys=True))
    else:
        print(text)


def format_series(module: ZooModule, s: TruncSeries) -> str:
    """``(v[0])*x^-2 + (x[1]*x[3])*x^1``, lowest exponent first."""
    if not s.terms:
        return "0"
    var = s.variables[0]
    parts = []
    for (e,), w in sorted(s.terms.items()):
        body = f"({module.format(w)})"
        parts.append(body if e == 0 else f"{body}*{var}^{e}")
    return " + ".join(parts)


def cmd_bracket(args) -> int:
    a = grammar.parse_element(args.algebra, args.a)
    b = grammar.parse_element(args.algebra, args.b)
    result = gl_bracket(a, b) if args.algebra == "glinf" else e_bracket(a, b)
    _emit(args, {"command": "bracket", "algebra": args.algebra, "a": str(a), "b": str(b),
                 "result": str(result)}, str(result))
    return 0


def cmd_vacuum(args) -> int:
    try:
        params = grammar.parse_params(args.level, args.lam)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    word = grammar.parse_word(args.word)
    M = module_for(params)
    v = VACUUM
    for letter in reversed(word):
        v = M.act(letter, v)
    lam = {str(k): format_fraction(q) for k, q in params.lam}
    _emit(args, {"command": "vacuum", "level": format_fraction(params.level), "lambda": lam,
                 "word": " ".join(str(x) for x in word), "result": str(v)}, str(v))
    return 0


def _need(args, *names):
    missing = [n for n in names if getattr(args, n) is None]
    if missing:
        raise InputError(f"{args.action} needs --{', --'.join(missing)}")


def cmd_module(args) -> int:
    module = grammar.parse_module(args.module)
    _need(args, "vector")
    w = grammar.parse_zoo_vector(module, args.vector)
    payload = {"command": "module", "module": module.selector, "action": args.action,
               "vector": module.format(w)}
    if args.action == "act":
        _need(args, "elem")
        try:
            X = grammar.parse_gl(args.elem)
            result = module.act_gl(X, w)
        except grammar.ParseError:
            X = grammar.parse_gl_e(args.elem)
            result = module.act_e(X, w)
        text = module.format(result)
        payload.update(elem=str(X), result=text)
    elif args.action == "series":
        _need(args, "m")
        text = format_series(module, module.E_series(args.m, w))
        payload.update(m=args.m, result=text)
    elif args.action == "bbar":
        _need(args, "m")
        if args.order is not None:
            s = module.bbar_series(args.m, w, args.order)
            text = format_series(module, s)
            payload.update(m=args.m, order=args.order, result=text)
        else:
            _need(args, "k")
            if args.k < 0:
                raise InputError("--k must be nonnegative")
            text = module.format(module.bbar_mode(args.m, args.k, w))
            payload.update(m=args.m, k=args.k, result=text)
    elif args.action == "recover":
        _need(args, "m", "N")
        sol = module.recover_E(args.m, w, args.N)
        rows = {str(n): module.format(v) for n, v in sorted(sol.items())}
        text = "\n".join(f"{n}: {rows[str(n)]}" for n in sorted(sol))
        payload.update(m=args.m, N=args.N, result=rows)
    else:
        rep = module.level_witness(w, scan=args.scan)
        forced = module.format(rep.forced_central)
        payload.update(result={
            "S": list(rep.S), "m": rep.m, "n": rep.n, "psi": format_fraction(rep.psi),
            "double_action": module.format(rep.double_action),
            "matrix_action": module.format(rep.matrix_action),
            "forced_central": forced, "level_zero": rep.level_zero,
        })
        text = (f"S = {list(rep.S)}, m = {rep.m}, n = {rep.n}\n"
                f"[E[{rep.m},{rep.n}],E[{rep.n},{rep.m}]] w = {module.format(rep.double_action)}\n"
                f"(E[{rep.m},{rep.m}] - E[{rep.n},{rep.n}]) w = {module.format(rep.matrix_action)}\n"
                f"forced K w = {forced}")
    _emit(args, payload, text)
    return 0


def cmd_verify(args) -> int:
    if args.suite not in SUITES:
        known = ", ".join(SUITES)
        print(f"error: unknown suite {args.suite!r}; known suites: {known}", file=sys.stderr)
        return 2
    try:
        report = run_suite(args.suite, window=args.window, level=args.level, seed=args.seed,
                           timing=args.timing)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    print(report.to_json() if args.format == "json" else report.to_text())
    return 0 if report.passed else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="glinf-qva", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def fmt(sp):
        sp.add_argument("--format", choices=("text", "json"), default="text")

    b = sub.add_parser("bracket", help="bracket two elements")
    b.add_argument("algebra", choices=("glinf", "glinf-e"))
    b.add_argument("a")
    b.add_argument("b")
    fmt(b)
    b.set_defaults(func=cmd_bracket)

    v = sub.add_parser("vacuum", help="apply a word of generators to the highest-weight vector")
    v.add_argument("word", help='space-separated letters, e.g. "B[1,-1] B[0,-1]"')
    v.add_argument("--level", default="0")
    v.add_argument("--lambda", dest="lam", default=None, help='JSON map, e.g. {"3": "5/2"}')
    fmt(v)
    v.set_defaults(func=cmd_vacuum)

    m = sub.add_parser("module", help="compute in a concrete module (cinf, sym:r, ext:r, vsa:JSON)")
    m.add_argument("module")
    m.add_argument("action", choices=("act", "series", "bbar", "recover", "witness"))
    m.add_argument("--elem")
    m.add_argument("--vector")
    m.add_argument("--m", type=int)
    m.add_argument("--k", type=int)
    m.add_argument("--N", type=int)
    m.add_argument("--order", type=int)
    m.add_argument("--scan", type=int, default=64)
    fmt(m)
    m.set_defaults(func=cmd_module)

    r = sub.add_parser("verify", help="run a verification suite",
                       description="suites: " + ", ".join(SUITES))
    r.add_argument("suite")
    r.add_argument("--window", type=int, default=None)
    r.add_argument("--level", default="0")
    r.add_argument("--seed", type=int, default=0)
    r.add_argument("--timing", action="store_true", help="include wall time (breaks byte determinism)")
    fmt(r)
    r.set_defaults(func=cmd_verify)
    return p


_NEGATIVE = re.compile(r"-\d")
_VALUED = {"--level", "--window", "--seed", "--m", "--k", "--N", "--order", "--scan", "--vector", "--elem"}


def _glue_negative_values(argv: list[str]) -> list[str]:
    # argparse takes "-1/2" for a flag; "--level=-1/2" is unambiguous
    out: list[str] = []
    for tok in argv:
        if out and out[-1] in _VALUED and _NEGATIVE.match(tok):
            out[-1] = f"{out[-1]}={tok}"
        else:
            out.append(tok)
    return out


def main(argv: list[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    args = build_parser().parse_args(_glue_negative_values(argv))
    try:
        return args.func(args)
    except grammar.ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except (InputError, ShapeMismatch, PreconditionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
