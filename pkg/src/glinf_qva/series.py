"""Truncated multivariate Laurent series with explicit validity windows.

A :class:`TruncSeries` stores the coefficients of a formal series in a
fixed tuple of variables.  Its window says which coefficients are known
exactly:

* ``lo[i]``: when ``bounded[i]`` is true, every coefficient below it is
  genuinely zero (a series in ``W((x))``); otherwise the coefficients below
  ``lo[i]`` are simply unknown (a two-sided formal distribution cut off).
* ``hi[i]`` is the highest exponent known exactly, or ``None`` when nothing
  was cut off above.
* ``order`` optionally caps the total degree ``sum(e)`` of known terms.

Products propagate these bounds, so a coefficient is only ever compared
when every contribution to it has been accounted for.  Coefficients may be
:class:`~fractions.Fraction` or any vector type supporting ``+``, scalar
``*`` (``.scale``) and truthiness; module vectors never multiply together.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Any, Callable, Iterable, Mapping, Sequence

VARIABLES = ("x", "x0", "x1", "x2")


class IncomparableWindows(ValueError):
    pass


def _is_scalar(c) -> bool:
    return isinstance(c, (int, Fraction))


def _min_opt(*vals):
    vals = [v for v in vals if v is not None]
    return min(vals) if vals else None


def _add_opt(a, b):
    return None if a is None or b is None else a + b


def _scaled(c, q):
    if _is_scalar(c):
        return c * q
    return c.scale(q)


class TruncSeries:
    __slots__ = ("variables", "lo", "hi", "bounded", "order", "terms", "truncated")

    def __init__(
        self,
        variables: Sequence[str],
        terms: Mapping[tuple[int, ...], Any] | Iterable = (),
        lo: Sequence[int] | None = None,
        hi: Sequence[int | None] | None = None,
        order: int | None = None,
        bounded: Sequence[bool] | None = None,
        truncated: bool = False,
    ):
        variables = tuple(variables)
        for v in variables:
            if v not in VARIABLES:
                raise ValueError(f"unknown formal variable {v!r}")
        if len(set(variables)) != len(variables):
            raise ValueError("repeated variable")
        nv = len(variables)
        acc: dict[tuple[int, ...], Any] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for e, c in items:
            e = tuple(e)
            if len(e) != nv:
                raise ValueError(f"exponent {e} does not match variables {variables}")
            if _is_scalar(c):
                c = Fraction(c)
            acc[e] = acc[e] + c if e in acc else c
        acc = {e: c for e, c in acc.items() if c}
        if lo is None:
            lo = tuple(min((e[i] for e in acc), default=0) for i in range(nv))
        self.variables = variables
        self.lo = tuple(lo)
        self.hi = (None,) * nv if hi is None else tuple(hi)
        self.bounded = (True,) * nv if bounded is None else tuple(bool(b) for b in bounded)
        self.order = order
        self.truncated = truncated
        for e in acc:
            for i in range(nv):
                if self.bounded[i] and e[i] < self.lo[i]:
                    raise ValueError(f"exponent {e} below declared support bound {self.lo}")
        kept = {e: c for e, c in acc.items() if self.in_window(e)}
        if len(kept) != len(acc):
            self.truncated = True
        self.terms = kept

    # -- window bookkeeping -------------------------------------------------
    def in_window(self, e: Sequence[int]) -> bool:
        for i, x in enumerate(e):
            if x < self.lo[i]:
                return False
            if self.hi[i] is not None and x > self.hi[i]:
                return False
        return self.order is None or sum(e) <= self.order

    def known(self, e: Sequence[int]) -> bool:
        """True when the coefficient at ``e`` is known exactly (possibly zero)."""
        for i, x in enumerate(e):
            if self.hi[i] is not None and x > self.hi[i]:
                return False
            if not self.bounded[i] and x < self.lo[i]:
                return False
        return self.order is None or sum(e) <= self.order

    def coefficient(self, e: Sequence[int]):
        e = tuple(e)
        if not self.known(e):
            raise IncomparableWindows(f"coefficient at {e} lies outside the known window")
        return self.terms.get(e, 0)

    def __getitem__(self, e):
        if isinstance(e, int):
            e = (e,)
        return self.coefficient(e)

    def is_zero(self) -> bool:
        return not self.terms

    def is_polynomial(self) -> bool:
        """Exact Laurent polynomial: nothing unknown in any direction."""
        return all(self.bounded) and all(h is None for h in self.hi) and self.order is None

    def _like(self, terms) -> TruncSeries:
        return TruncSeries(
            self.variables, terms, lo=self.lo, hi=self.hi, order=self.order,
            bounded=self.bounded, truncated=self.truncated,
        )

    def restrict(self, hi: Sequence[int | None] | None = None, order: int | None = None) -> TruncSeries:
        """Shrink the known window; discarded terms do not set the flag."""
        new_hi = self.hi if hi is None else tuple(_min_opt(a, b) for a, b in zip(self.hi, hi))
        out = TruncSeries(self.variables, {}, lo=self.lo, hi=new_hi,
                          order=_min_opt(self.order, order), bounded=self.bounded,
                          truncated=self.truncated)
        out.terms = {e: c for e, c in self.terms.items() if out.in_window(e)}
        return out

    # -- linear structure ---------------------------------------------------
    def _check_vars(self, other: TruncSeries) -> None:
        if self.variables != other.variables:
            raise ValueError(f"variable mismatch {self.variables} vs {other.variables}")

    def __add__(self, other: TruncSeries) -> TruncSeries:
        if not isinstance(other, TruncSeries):
            return NotImplemented
        self._check_vars(other)
        lo, bounded = [], []
        for i in range(len(self.variables)):
            ba, bb = self.bounded[i], other.bounded[i]
            if ba and bb:
                lo.append(min(self.lo[i], other.lo[i]))
            elif ba:
                lo.append(other.lo[i])
            elif bb:
                lo.append(self.lo[i])
            else:
                lo.append(max(self.lo[i], other.lo[i]))
            bounded.append(ba and bb)
        hi = tuple(_min_opt(a, b) for a, b in zip(self.hi, other.hi))
        out = TruncSeries(self.variables, {}, lo=lo, hi=hi,
                          order=_min_opt(self.order, other.order), bounded=bounded,
                          truncated=self.truncated or other.truncated)
        merged: dict = {}
        for src in (self.terms, other.terms):
            for e, c in src.items():
                if out.in_window(e):
                    merged[e] = merged[e] + c if e in merged else c
        out.terms = {e: c for e, c in merged.items() if c}
        return out

    def __neg__(self) -> TruncSeries:
        return self.scale(-1)

    def __sub__(self, other: TruncSeries) -> TruncSeries:
        return self + (-other)

    def scale(self, q) -> TruncSeries:
        q = Fraction(q)
        return self._like({e: _scaled(c, q) for e, c in self.terms.items()})

    def map_coefficients(self, fn: Callable[[Any], Any]) -> TruncSeries:
        """Apply a linear map to every coefficient (e.g. an operator on vectors)."""
        return self._like({e: fn(c) for e, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, TruncSeries):
            return ts_mul(self, other)
        return self.scale(other)

    def __rmul__(self, q):
        return self.scale(q)

    def __eq__(self, other):
        if not isinstance(other, TruncSeries):
            return NotImplemented
        return self.variables == other.variables and self.terms == other.terms

    __hash__ = None

    def __repr__(self) -> str:
        body = " + ".join(
            f"({c})*" + "*".join(f"{v}^{x}" for v, x in zip(self.variables, e))
            for e, c in sorted(self.terms.items())
        )
        return f"TruncSeries[{','.join(self.variables)}]({body or '0'})"


def embed(a: TruncSeries, variables: Sequence[str]) -> TruncSeries:
    """View ``a`` as a series in a larger variable tuple (constant in new ones)."""
    variables = tuple(variables)
    missing = [v for v in a.variables if v not in variables]
    if missing:
        raise ValueError(f"cannot drop variables {missing}")
    pos = {v: i for i, v in enumerate(a.variables)}

    def pick(seq, default):
        return tuple(seq[pos[v]] if v in pos else default for v in variables)

    terms = {pick(e, 0): c for e, c in a.terms.items()}
    return TruncSeries(
        variables, terms, lo=pick(a.lo, 0), hi=pick(a.hi, None), order=a.order,
        bounded=pick(a.bounded, True), truncated=a.truncated,
    )


def monomial(variables: Sequence[str], exponent: Sequence[int], coeff=1) -> TruncSeries:
    """An exact single-term Laurent monomial."""
    exponent = tuple(exponent)
    return TruncSeries(variables, {exponent: coeff}, lo=exponent)


def _support_range(s: TruncSeries, i: int) -> tuple[int, int]:
    vals = [e[i] for e in s.terms]
    return (min(vals), max(vals)) if vals else (0, 0)


def ts_mul(a: TruncSeries, b: TruncSeries) -> TruncSeries:
    """Cauchy product restricted to the window where it is fully determined.

    Both factors bounded below in a variable: the usual Laurent-series
    product.  A factor cut off below (two-sided distribution) may only be
    multiplied by an exact Laurent polynomial in that variable.
    """
    a._check_vars(b)
    a_scalar = all(_is_scalar(c) for c in a.terms.values())
    b_scalar = all(_is_scalar(c) for c in b.terms.values())
    if not a_scalar and not b_scalar:
        raise TypeError("cannot multiply two module-valued series")
    nv = len(a.variables)
    lo, hi, bounded = [], [], []
    for i in range(nv):
        if a.bounded[i] and b.bounded[i]:
            lo.append(a.lo[i] + b.lo[i])
            hi.append(_min_opt(_add_opt(a.hi[i], b.lo[i]), _add_opt(b.hi[i], a.lo[i])))
            bounded.append(True)
            continue
        wide, poly = (a, b) if not a.bounded[i] else (b, a)
        if not poly.bounded[i] or poly.hi[i] is not None:
            raise ValueError(
                f"product in {a.variables[i]} is not well defined: both factors are infinite"
            )
        pmin, pmax = _support_range(poly, i)
        lo.append(wide.lo[i] + pmax)
        hi.append(_add_opt(wide.hi[i], pmin))
        bounded.append(False)

    def min_degree(s: TruncSeries) -> int:
        if all(s.bounded):
            return sum(s.lo)
        return min((sum(e) for e in s.terms), default=0)

    order = _min_opt(_add_opt(a.order, min_degree(b)), _add_opt(b.order, min_degree(a)))
    out = TruncSeries(a.variables, {}, lo=lo, hi=hi, order=order, bounded=bounded,
                      truncated=a.truncated or b.truncated)
    acc: dict = {}
    dropped = False
    for ea, ca in a.terms.items():
        for eb, cb in b.terms.items():
            e = tuple(x + y for x, y in zip(ea, eb))
            if not out.in_window(e):
                # terms landing where the product is unknown carry no information
                if any(out.hi[i] is not None and e[i] > out.hi[i] for i in range(nv)) or (
                    out.order is not None and sum(e) > out.order
                ):
                    dropped = True
                continue
            prod = _scaled(cb, ca) if a_scalar else _scaled(ca, cb)
            acc[e] = acc[e] + prod if e in acc else prod
    out.terms = {e: c for e, c in acc.items() if c}
    out.truncated = out.truncated or dropped
    return out


def ts_exp_diff(a: int, order: int, variables: Sequence[str] = ("x1", "x2")) -> TruncSeries:
    """``e^{a(x1 - x2)}`` up to total degree ``order``."""
    terms = {}
    for i in range(order + 1):
        for j in range(order + 1 - i):
            q = Fraction(a ** (i + j) * (-1) ** j, factorial(i) * factorial(j))
            if q:
                terms[(i, j)] = q
    return TruncSeries(variables, terms, lo=(0, 0), hi=(order, order), order=order)


def ts_exp(a: int, order: int, var: str = "x") -> TruncSeries:
    """``e^{a x}`` up to ``x^order``."""
    terms = {(j,): Fraction(a**j, factorial(j)) for j in range(order + 1)}
    return TruncSeries((var,), terms, lo=(0,), hi=(order,))


def ts_substitute_phi(a: TruncSeries, x0_order: int) -> TruncSeries:
    """Substitute ``x1 = x2 e^{x0}`` into a series in ``(x1, x2)``.

    ``x1^n`` becomes ``x2^n sum_j n^j x0^j / j!``, kept up to ``x0^x0_order``.
    Every x1 power feeds every x0 order, so the x2-window of the result
    shrinks to the powers whose contributions are all known.  Result
    variables are ``(x0, x2)``.
    """
    if a.variables != ("x1", "x2"):
        raise ValueError("ts_substitute_phi expects variables (x1, x2)")
    if a.order is not None:
        raise ValueError("total-degree truncation in (x1, x2) does not survive substitution")
    if not all(a.bounded):
        raise ValueError("substitution needs a series bounded below in x1 and x2")
    lo1, lo2 = a.lo
    # out[j, E] = sum_n n^j/j! a[n, E-n]; known only if every a[n, E-n] with n >= lo1 is
    x2_hi = _min_opt(_add_opt(a.hi[1], lo1), _add_opt(a.hi[0], lo2))
    out = TruncSeries(("x0", "x2"), {}, lo=(0, lo1 + lo2),
                      hi=(x0_order, x2_hi), truncated=a.truncated)
    acc: dict = {}
    for (n, m), c in a.terms.items():
        for j in range(x0_order + 1):
            q = Fraction(n**j, factorial(j))
            if not q:
                continue
            e = (j, n + m)
            if not out.in_window(e):
                continue
            term = _scaled(c, q)
            acc[e] = acc[e] + term if e in acc else term
    out.terms = {e: c for e, c in acc.items() if c}
    return out


@dataclass
class IdentityReport:
    passed: bool
    checked: int
    exponent: tuple[int, ...] | None = None
    lhs: Any = None
    rhs: Any = None
    notes: list[str] = field(default_factory=list)

    def __bool__(self) -> bool:
        return self.passed


def check_identity(
    lhs: TruncSeries,
    rhs: TruncSeries,
    hi: Sequence[int | None] | None = None,
    order: int | None = None,
    lo: Sequence[int | None] | None = None,
) -> IdentityReport:
    """Compare coefficients of ``lhs`` and ``rhs`` on a common window.

    By default the window is the largest region on which both sides are
    known.  A requested ``lo``/``hi``/``order`` beyond what either side knows
    raises :class:`IncomparableWindows`; ``None`` entries mean "as far as
    known".  Returns a report naming the first differing exponent.
    """
    if lhs.variables != rhs.variables:
        raise IncomparableWindows(f"variable mismatch {lhs.variables} vs {rhs.variables}")
    nv = len(lhs.variables)
    names = lhs.variables

    joint_hi = tuple(_min_opt(lhs.hi[i], rhs.hi[i]) for i in range(nv))
    joint_lo = []
    for i in range(nv):
        floors = [s.lo[i] for s in (lhs, rhs) if not s.bounded[i]]
        joint_lo.append(max(floors) if floors else None)
    joint_order = _min_opt(lhs.order, rhs.order)

    want_hi = list(joint_hi) if hi is None else list(hi)
    want_lo = list(joint_lo) if lo is None else list(lo)
    for i in range(nv):
        if want_hi[i] is None:
            want_hi[i] = joint_hi[i]
        elif joint_hi[i] is not None and want_hi[i] > joint_hi[i]:
            raise IncomparableWindows(
                f"requested {names[i]} <= {want_hi[i]} but only known to {joint_hi[i]}"
            )
        if want_lo[i] is None:
            want_lo[i] = joint_lo[i]
        elif joint_lo[i] is not None and want_lo[i] < joint_lo[i]:
            raise IncomparableWindows(
                f"requested {names[i]} >= {want_lo[i]} but only known from {joint_lo[i]}"
            )
    if joint_order is not None:
        if order is None:
            order = joint_order
        elif order > joint_order:
            raise IncomparableWindows(f"requested order {order} but known to {joint_order}")

    def wanted(e):
        for i in range(nv):
            if want_hi[i] is not None and e[i] > want_hi[i]:
                return False
            if want_lo[i] is not None and e[i] < want_lo[i]:
                return False
        return order is None or sum(e) <= order

    keys = sorted({e for e in itertools.chain(lhs.terms, rhs.terms) if wanted(e)})
    for e in keys:
        a = lhs.terms.get(e, 0)
        b = rhs.terms.get(e, 0)
        if _coeff_differs(a, b):
            return IdentityReport(False, len(keys), e, a, b)
    notes = []
    if lhs.truncated or rhs.truncated:
        notes.append("inputs carried truncation; compared only on the known window")
    return IdentityReport(True, len(keys), notes=notes)


def _coeff_differs(a, b) -> bool:
    if _is_scalar(a) and _is_scalar(b):
        return a != b
    if _is_scalar(a):
        return bool(a) or bool(b)
    if _is_scalar(b):
        return bool(b) or bool(a)
    return bool(a - b)
