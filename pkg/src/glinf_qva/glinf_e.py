"""The exponentially twisted Lie algebra on ``E (x) C((t)) + C K``.

The bracket is defined through double residues of

    g(x1) h(x2) e^{(m-n)(x1-x2)} (B_t(m,x2) - B_t(n,x1) + f(m,n) K).

Evaluating both residues gives the closed form used here.  With
``R_g = Res_t g(t) e^{(m-n)t}`` and ``R_h = Res_t h(t) e^{(n-m)t}``:

    [e_m (x) g, e_n (x) h] = R_g * e_m (x) h e^{-(m-n)t}
                           - R_h * e_n (x) g e^{(m-n)t}
                           + R_g R_h f(m,n) K

Only multiplication by ``e^{+-(m-n)t}`` and residues occur, so the span of
``t^r e^{ct}`` (:class:`~glinf_qva.exppoly.ExpPoly`) is closed under the
bracket and every computation stays exact.  The formula is validated
against the generating-function relation in :mod:`glinf_qva.identities`.

Elements store flat keys ``(m, r, c)`` for ``e_m (x) t^r e^{ct}``.
"""

from __future__ import annotations

import math
from fractions import Fraction

from ._linear import CentralCombination
from .exppoly import ExpPoly, ep_mul_exp, ep_residue_twisted
from .glinf import f_fn, format_sum


class GlInfEElem(CentralCombination):
    __slots__ = ()

    @classmethod
    def from_parts(cls, parts: dict[int, ExpPoly], central=0) -> GlInfEElem:
        terms = {}
        for m, g in parts.items():
            for (r, c), q in g.terms.items():
                terms[(m, r, c)] = q
        return cls(terms, central)

    @property
    def parts(self) -> dict[int, ExpPoly]:
        grouped: dict[int, dict] = {}
        for (m, r, c), q in self.terms.items():
            grouped.setdefault(m, {})[(r, c)] = q
        return {m: ExpPoly._raw(d) for m, d in grouped.items()}

    def __str__(self) -> str:
        parts = []
        for (m, r, c), q in self.sorted_terms():
            body = f"B[{m},{r}]" if c == 0 else f"EB[{m};{r};{c}]"
            parts.append((body, q))
        if self.central:
            parts.append(("K", self.central))
        return format_sum(parts)


def B(m: int, r: int, coeff=1) -> GlInfEElem:
    """The generator ``e_m (x) t^r``."""
    return GlInfEElem({(m, r, 0): coeff})


def EB(m: int, r: int, c: int, coeff=1) -> GlInfEElem:
    """``e_m (x) t^r e^{ct}``."""
    return GlInfEElem({(m, r, c): coeff})


K = GlInfEElem(central=1)


def _bracket_parts(m: int, g: ExpPoly, n: int, h: ExpPoly, acc: dict) -> Fraction:
    d = m - n
    rg = ep_residue_twisted(g, d)
    rh = ep_residue_twisted(h, -d)
    if rg:
        for (r, c), q in ep_mul_exp(h, -d).terms.items():
            key = (m, r, c)
            acc[key] = acc.get(key, 0) + rg * q
    if rh:
        for (r, c), q in ep_mul_exp(g, d).terms.items():
            key = (n, r, c)
            acc[key] = acc.get(key, 0) - rh * q
    return rg * rh * f_fn(m, n)


def e_bracket(X: GlInfEElem, Y: GlInfEElem) -> GlInfEElem:
    acc: dict = {}
    k = Fraction(0)
    yparts = Y.parts
    for m, g in X.parts.items():
        for n, h in yparts.items():
            k += _bracket_parts(m, g, n, h, acc)
    return GlInfEElem._raw({key: v for key, v in acc.items() if v}, k)


def jacobi_residual(X: GlInfEElem, Y: GlInfEElem, Z: GlInfEElem) -> GlInfEElem:
    return (
        e_bracket(e_bracket(X, Y), Z)
        + e_bracket(e_bracket(Y, Z), X)
        + e_bracket(e_bracket(Z, X), Y)
    )


def filtration_degree(X: GlInfEElem) -> int | float:
    """Largest ``n`` with ``X`` in the ``n``-th filtration piece.

    The piece is ``E (x) t^n C[[t]]`` for ``n >= 1`` and additionally
    contains ``K`` for ``n <= 0``.  Returns ``math.inf`` for zero.
    """
    if X.is_zero():
        return math.inf
    degrees = [r for (_, r, _) in X.terms]
    if X.central:
        degrees.append(0)
    return min(degrees)


def is_creation(X: GlInfEElem) -> bool:
    """All terms are plain modes ``B(m, r)`` with ``r <= -1`` and no ``K``."""
    return not X.central and all(c == 0 and r < 0 for (_, r, c) in X.terms)
