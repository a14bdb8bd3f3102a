"""Exact exponential polynomials ``sum q * t^r * exp(c*t)``.

The coefficient ring used for the exponentially twisted Lie algebra is the
rational span of ``t^r e^{ct}`` with integer ``r`` and ``c``.  It sits
inside the formal Laurent series in ``t`` and is closed under everything
the bracket does: multiplication by ``e^{dt}`` and taking residues.  The
family ``t^r e^{ct}`` is linearly independent, so the term map is a
canonical form.

Laurent expansion convention: the coefficient of ``t^n`` in
``t^r e^{ct}`` is ``c^(n-r) / (n-r)!`` for ``n >= r`` and zero otherwise,
with ``0^0 = 1``.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial

from ._linear import LinearCombination, as_fraction, format_fraction


def _check_int(x, what: str) -> int:
    if isinstance(x, bool) or not isinstance(x, int):
        raise TypeError(f"{what} must be an integer, got {x!r}")
    return x


class ExpPoly(LinearCombination):
    """Element of the ring spanned by ``t^r e^{ct}``; keys are ``(r, c)``."""

    __slots__ = ()

    def __init__(self, terms=()):
        super().__init__(terms)
        for key in self._terms:
            if not (isinstance(key, tuple) and len(key) == 2):
                raise ValueError(f"ExpPoly keys are (r, c) pairs, got {key!r}")
            _check_int(key[0], "t-exponent")
            _check_int(key[1], "exponential rate")

    @classmethod
    def monomial(cls, r: int, c: int = 0, coeff=1) -> ExpPoly:
        return cls({(_check_int(r, "t-exponent"), _check_int(c, "exponential rate")): coeff})

    @classmethod
    def zero(cls) -> ExpPoly:
        return cls._raw({})

    def min_power(self) -> int | None:
        """Lowest ``t``-power occurring in the Laurent expansion."""
        if not self._terms:
            return None
        return min(r for r, _ in self._terms)

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        out = []
        for (r, c), q in self.sorted_terms():
            body = f"{format_fraction(abs(q))} * t^{r}"
            if c:
                body += f" * exp({c}*t)"
            if not out:
                out.append(("-" if q < 0 else "") + body)
            else:
                out.append((" - " if q < 0 else " + ") + body)
        return "".join(out)


def ep_add(a: ExpPoly, b: ExpPoly) -> ExpPoly:
    return a + b


def ep_scale(q, a: ExpPoly) -> ExpPoly:
    return a.scale(q)


def ep_mul_exp(a: ExpPoly, d: int) -> ExpPoly:
    """Multiply by ``e^{dt}``."""
    d = _check_int(d, "exponential rate")
    if d == 0:
        return a
    return ExpPoly._raw({(r, c + d): q for (r, c), q in a.terms.items()})


def _basis_coefficient(r: int, c: int, n: int) -> Fraction:
    """Coefficient of ``t^n`` in ``t^r e^{ct}``."""
    k = n - r
    if k < 0:
        return Fraction(0)
    return Fraction(c**k, factorial(k))


def ep_residue_twisted(a: ExpPoly, d: int) -> Fraction:
    """``Res_t a(t) e^{dt}``, the coefficient of ``t^{-1}``."""
    d = _check_int(d, "exponential rate")
    total = Fraction(0)
    for (r, c), q in a.terms.items():
        if r <= -1:
            total += q * _basis_coefficient(r, c + d, -1)
    return total


def ep_coefficient(a: ExpPoly, n: int) -> Fraction:
    total = Fraction(0)
    for (r, c), q in a.terms.items():
        if n >= r:
            total += q * _basis_coefficient(r, c, n)
    return total


def ep_mode_window(a: ExpPoly, lo: int, hi: int) -> list[tuple[int, Fraction]]:
    """Laurent coefficients of ``a`` for ``t^lo .. t^hi`` (inclusive)."""
    if lo > hi:
        raise ValueError(f"empty window [{lo}, {hi}]")
    return [(n, ep_coefficient(a, n)) for n in range(lo, hi + 1)]


def ep_from_laurent(coeffs: dict[int, object]) -> ExpPoly:
    """Finite Laurent polynomial ``sum q_n t^n`` as an ExpPoly."""
    return ExpPoly({(n, 0): as_fraction(q) for n, q in coeffs.items()})
