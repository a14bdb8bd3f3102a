"""Text grammars for elements, vectors and module selectors.

Every ``parse_*`` here inverts the corresponding ``__str__``/``format`` on
canonical forms.  Whitespace between tokens is ignored except where it
separates letters of a PBW word.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Callable

from ._linear import as_fraction
from .exppoly import ExpPoly
from .glinf import GlInfElem
from .glinf_e import GlInfEElem
from .pbw import ModuleParams, PBWVector, gen_key
from .zoo import CInf, Ext, Sym, VSA, ZooModule, ZooVector, parse_selector


class ParseError(ValueError):
    def __init__(self, message: str, text: str, position: int):
        super().__init__(f"{message} at position {position} in {text!r}")
        self.text = text
        self.position = position


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, message: str, pos: int | None = None) -> ParseError:
        return ParseError(message, self.text, self.pos if pos is None else pos)

    def ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def at_end(self) -> bool:
        self.ws()
        return self.pos >= len(self.text)

    def peek(self, s: str) -> bool:
        self.ws()
        return self.text.startswith(s, self.pos)

    def accept(self, s: str) -> bool:
        if self.peek(s):
            self.pos += len(s)
            return True
        return False

    def expect(self, s: str) -> None:
        if not self.accept(s):
            raise self.error(f"expected {s!r}")

    def peek_digit(self) -> bool:
        self.ws()
        return self.pos < len(self.text) and self.text[self.pos].isdigit()

    def integer(self) -> int:
        self.ws()
        start = self.pos
        if self.pos < len(self.text) and self.text[self.pos] in "+-":
            self.pos += 1
        digits = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == digits:
            raise self.error("expected an integer", start)
        return int(self.text[start:self.pos])

    def rational(self) -> Fraction:
        num = self.integer()
        if self.peek("/"):
            save = self.pos
            self.pos += 1
            self.ws()
            if self.pos < len(self.text) and self.text[self.pos].isdigit():
                den = self.integer()
                if den == 0:
                    raise self.error("zero denominator")
                return Fraction(num, den)
            self.pos = save
        return Fraction(num)

    def finish(self) -> None:
        if not self.at_end():
            raise self.error("unexpected trailing input")


def _parse_sum(text: str, term: Callable[[_Scanner], tuple[object, Fraction]]) -> list:
    """``[-]term (+|- term)*`` or ``0``; returns ``[(key, coeff), ...]``."""
    sc = _Scanner(text)
    if sc.at_end():
        raise sc.error("empty expression")
    save = sc.pos
    if sc.accept("0") and sc.at_end():
        return []
    sc.pos = save
    out = []
    sign = -1 if sc.accept("-") else 1
    while True:
        key, q = term(sc)
        out.append((key, sign * q))
        if sc.at_end():
            return out
        if sc.accept("+"):
            sign = 1
        elif sc.accept("-"):
            sign = -1
        else:
            raise sc.error("expected '+' or '-'")


def _coefficient(sc: _Scanner) -> Fraction:
    """Optional ``q*`` prefix."""
    if sc.peek_digit():
        q = sc.rational()
        sc.expect("*")
        return q
    return Fraction(1)


def _accumulate(pairs, central_key="K"):
    terms: dict = {}
    central = Fraction(0)
    for key, q in pairs:
        if key == central_key:
            central += q
        else:
            terms[key] = terms.get(key, 0) + q
    return terms, central


# -- Lie algebra elements ---------------------------------------------------

def _gl_term(sc: _Scanner):
    q = _coefficient(sc)
    if sc.accept("K"):
        return "K", q
    if sc.accept("E["):
        i = sc.integer()
        sc.expect(",")
        j = sc.integer()
        sc.expect("]")
        return (i, j), q
    raise sc.error("expected E[i,j] or K")


def parse_gl(text: str) -> GlInfElem:
    """``3/2*E[0,1] + K - E[2,2]``."""
    terms, central = _accumulate(_parse_sum(text, _gl_term))
    return GlInfElem(terms, central)


def _e_term(sc: _Scanner):
    q = _coefficient(sc)
    if sc.accept("K"):
        return "K", q
    if sc.accept("EB["):
        m = sc.integer()
        sc.expect(";")
        r = sc.integer()
        sc.expect(";")
        c = sc.integer()
        sc.expect("]")
        return (m, r, c), q
    if sc.accept("B["):
        m = sc.integer()
        sc.expect(",")
        r = sc.integer()
        sc.expect("]")
        return (m, r, 0), q
    raise sc.error("expected B[m,r], EB[m;r;c] or K")


def parse_gl_e(text: str) -> GlInfEElem:
    """``B[0,-1] + 2*EB[1;-1;3] - K``."""
    terms, central = _accumulate(_parse_sum(text, _e_term))
    return GlInfEElem(terms, central)


def parse_element(algebra: str, text: str):
    if algebra == "glinf":
        return parse_gl(text)
    if algebra == "glinf-e":
        return parse_gl_e(text)
    raise ValueError(f"unknown algebra {algebra!r}")


# -- exponential polynomials ------------------------------------------------

def _ep_term(sc: _Scanner):
    q = sc.rational()
    sc.expect("*")
    sc.expect("t^")
    r = sc.integer()
    c = 0
    if sc.accept("*"):
        sc.expect("exp(")
        c = sc.integer()
        sc.expect("*")
        sc.expect("t")
        sc.expect(")")
    return (r, c), q


def parse_exppoly(text: str) -> ExpPoly:
    """``2 * t^-1 * exp(3*t) - 1/2 * t^0``."""
    terms, _ = _accumulate(_parse_sum(text, _ep_term), central_key=None)
    return ExpPoly(terms)


# -- PBW words and vectors --------------------------------------------------

def parse_word(text: str) -> list[GlInfEElem]:
    """Space-separated letters ``B[m,r]`` or ``EB[m;r;c]``, leftmost acts last."""
    sc = _Scanner(text)
    letters = []
    while not sc.at_end():
        start = sc.pos
        key, q = _e_term(sc)
        if key == "K":
            raise sc.error("K is not a word letter", start)
        letters.append(GlInfEElem({key: q}))
    if not letters:
        raise sc.error("empty word")
    return letters


def _pbw_monomial(sc: _Scanner) -> tuple:
    gens = []
    while sc.peek("B["):
        start = sc.pos
        sc.expect("B[")
        m = sc.integer()
        sc.expect(",")
        r = sc.integer()
        sc.expect("]")
        if r > -1:
            raise sc.error(f"B[{m},{r}] is not a creation mode", start)
        gens.append((m, r))
    sc.expect(".1")
    if any(gen_key(a) > gen_key(b) for a, b in zip(gens, gens[1:])):
        raise sc.error("monomial is not in canonical order")
    return tuple(gens)


def _pbw_term(sc: _Scanner):
    if sc.peek_digit():
        q = sc.rational()
        if sc.peek(".1") or sc.peek("B["):
            return _pbw_monomial(sc), q
        return (), q
    return _pbw_monomial(sc), Fraction(1)


def parse_pbw(text: str) -> PBWVector:
    """``B[0,-1]B[1,-1].1 - 2.1``, ``5/2 .1`` or ``1`` for the highest-weight vector."""
    terms, _ = _accumulate(_parse_sum(text, _pbw_term), central_key=None)
    return PBWVector(terms)


def parse_params(level: str | int | Fraction = 0, lam: str | dict | None = None) -> ModuleParams:
    """Level as a rational literal, λ as a JSON object ``{"3": "5/2"}``."""
    try:
        level_q = as_fraction(level)
    except (TypeError, ValueError) as exc:
        raise ValueError(f"malformed level {level!r}: {exc}") from None
    if lam is None or lam == "":
        data = {}
    elif isinstance(lam, str):
        try:
            data = json.loads(lam)
        except json.JSONDecodeError as exc:
            raise ValueError(f"malformed lambda JSON: {exc}") from None
    else:
        data = lam
    if not isinstance(data, dict):
        raise ValueError("lambda must be a JSON object mapping index to rational")
    out = {}
    for k, v in data.items():
        try:
            out[int(k)] = as_fraction(v)
        except (TypeError, ValueError):
            raise ValueError(f"malformed lambda entry {k!r}: {v!r}") from None
    return ModuleParams.make(level_q, out)


# -- zoo vectors ------------------------------------------------------------

def _index(sc: _Scanner, letter: str) -> int:
    sc.expect(f"{letter}[")
    i = sc.integer()
    sc.expect("]")
    return i


def _cinf_body(module, sc):
    return _index(sc, "v"), Fraction(1)


def _sym_body(module: Sym, sc):
    if sc.accept("1"):
        idx: list[int] = []
    else:
        idx = []
        while True:
            i = _index(sc, "x")
            p = sc.integer() if sc.accept("^") else 1
            if p < 1:
                raise sc.error("powers must be positive")
            idx.extend([i] * p)
            if not sc.accept("*"):
                break
    if len(idx) != module.r:
        raise sc.error(f"monomial has degree {len(idx)}, expected {module.r}")
    return tuple(sorted(idx)), Fraction(1)


def _ext_body(module: Ext, sc):
    if sc.accept("1"):
        idx: list[int] = []
    else:
        idx = [_index(sc, "v")]
        while sc.accept("^"):
            idx.append(_index(sc, "v"))
    if len(idx) != module.r:
        raise sc.error(f"wedge has degree {len(idx)}, expected {module.r}")
    w = module.basis(*idx)
    if not w.terms:
        return None, Fraction(0)
    (label, sign), = w.terms.items()
    return label, sign


def _vsa_body(module: VSA, sc):
    offsets = [0] * len(module.S)
    seen = set()
    free: list[int] = []
    if sc.accept("1"):
        pass
    else:
        while True:
            start = sc.pos
            i = _index(sc, "x")
            p = module._pos(i)
            if p is not None:
                if i in seen:
                    raise sc.error(f"x[{i}] repeated", start)
                seen.add(i)
                sc.expect("^")
                sc.expect("{")
                e = sc.rational()
                if sc.accept("+"):
                    e += sc.integer()
                elif sc.accept("-"):
                    e -= sc.integer()
                sc.expect("}")
                off = e - module.alpha[p]
                if off.denominator != 1:
                    raise sc.error(f"exponent {e} of x[{i}] is not alpha + integer", start)
                offsets[p] = int(off)
            else:
                pw = sc.integer() if sc.accept("^") else 1
                if pw < 1:
                    raise sc.error("powers must be positive")
                free.extend([i] * pw)
            if not sc.accept("*"):
                break
    missing = [j for j in module.S if j not in seen]
    if missing:
        raise sc.error(f"missing factor x[{missing[0]}]^{{...}}")
    return (tuple(offsets), tuple(sorted(free))), Fraction(1)


_BODIES = {CInf: _cinf_body, Sym: _sym_body, Ext: _ext_body, VSA: _vsa_body}


def parse_zoo_vector(module: ZooModule, text: str) -> ZooVector:
    """Vector in the module's own grammar, e.g. ``2*x[1]*x[3] - x[0]^2``."""
    body = _BODIES[type(module)]

    def term(sc: _Scanner):
        q = Fraction(1)
        if sc.peek_digit():
            start = sc.pos
            q = sc.rational()
            if not sc.accept("*"):
                # bare rational: a multiple of the degree-zero basis vector "1"
                try:
                    label, s = body(module, _Scanner("1"))
                except ParseError as exc:
                    raise sc.error(f"bare number is not a vector here ({exc})", start) from None
                return label, q * s
        label, s = body(module, sc)
        return label, q * s

    terms: dict = {}
    for label, q in _parse_sum(text, term):
        if label is not None and q:
            terms[label] = terms.get(label, 0) + q
    try:
        return module.vector(terms)
    except ValueError as exc:
        raise ParseError(str(exc), text, 0) from None


def parse_module(text: str) -> ZooModule:
    """``cinf``, ``sym:2``, ``ext:3`` or ``vsa:{"S":[0],"alpha":{"0":"1/2"}}``."""
    try:
        return parse_selector(text)
    except (ValueError, KeyError, TypeError) as exc:
        raise ParseError(f"bad module selector: {exc}", text, 0) from None
