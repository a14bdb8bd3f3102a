"""Shared independent oracles (sympy series expansions) for the test-suite."""

from fractions import Fraction
from functools import lru_cache

import sympy as sp
from hypothesis import settings

T = sp.Symbol("t")


def to_fraction(x) -> Fraction:
    x = sp.nsimplify(x)
    return Fraction(int(sp.numer(x)), int(sp.denom(x)))


@lru_cache(maxsize=None)
def exp_taylor(rate: int, order: int) -> tuple[Fraction, ...]:
    """Coefficients of ``e^{rate t}`` up to ``t^order``, by sympy's series."""
    s = sp.series(sp.exp(rate * T), T, 0, order + 1).removeO()
    return tuple(to_fraction(s.coeff(T, k)) for k in range(order + 1))


def laurent_coeff(r: int, c: int, n: int) -> Fraction:
    """Coefficient of ``t^n`` in ``t^r e^{ct}`` through the sympy expansion."""
    if n < r:
        return Fraction(0)
    return exp_taylor(c, n - r)[n - r]


# sympy's first expansion of each rate is slow; exactness, not latency, is under test
settings.register_profile("glinf", deadline=None, max_examples=60)
settings.load_profile("glinf")
