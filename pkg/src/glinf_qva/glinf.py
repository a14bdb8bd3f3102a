"""The centrally extended Lie algebra of doubly infinite matrices.

Elements are finite rational combinations of the matrix units ``E[i,j]``
plus a multiple of the central element ``K``.  The bracket is

    [E[m,n], E[r,s]] = d(n,r) E[m,s] - d(m,s) E[r,n] + psi(E[m,n], E[r,s]) K

with the cocycle ``psi(E[i,j], E[m,n]) = d(i,n) d(j,m) f(i,j)``.
"""

from __future__ import annotations

from fractions import Fraction

from ._linear import CentralCombination, format_fraction
from .series import TruncSeries, embed, monomial

ONE = Fraction(1)
ZERO = Fraction(0)


def f_fn(m: int, n: int) -> Fraction:
    """``1`` if ``m <= 0 < n``, ``-1`` if ``n <= 0 < m``, else ``0``."""
    if m <= 0 and n >= 1:
        return ONE
    if n <= 0 and m >= 1:
        return -ONE
    return ZERO


def psi(i: int, j: int, m: int, n: int) -> Fraction:
    if i == n and j == m:
        return f_fn(i, j)
    return ZERO


class GlInfElem(CentralCombination):
    """Keys are index pairs ``(i, j)`` for ``E[i,j]``; ``central`` is the K part."""

    __slots__ = ()

    def __str__(self) -> str:
        parts = [(f"E[{i},{j}]", q) for (i, j), q in self.sorted_terms()]
        if self.central:
            parts.append(("K", self.central))
        return format_sum(parts)


def format_sum(parts: list[tuple[str, Fraction]]) -> str:
    """Render ``[(body, coeff), ...]`` as ``3/2*E[0,1] + K - E[2,2]``."""
    if not parts:
        return "0"
    out = []
    for body, q in parts:
        mag = abs(q)
        text = body if mag == 1 else f"{format_fraction(mag)}*{body}"
        if not out:
            out.append(("-" if q < 0 else "") + text)
        else:
            out.append((" - " if q < 0 else " + ") + text)
    return "".join(out)


def E(i: int, j: int, coeff=1) -> GlInfElem:
    return GlInfElem({(i, j): coeff})


K = GlInfElem(central=1)


def gl_bracket(a: GlInfElem, b: GlInfElem, central: bool = True) -> GlInfElem:
    """Bilinear bracket; ``central=False`` drops the cocycle term."""
    acc: dict[tuple[int, int], Fraction] = {}
    k = ZERO
    for (m, n), p in a.terms.items():
        for (r, s), q in b.terms.items():
            pq = p * q
            if n == r:
                acc[(m, s)] = acc.get((m, s), ZERO) + pq
            if m == s:
                acc[(r, n)] = acc.get((r, n), ZERO) - pq
            if central and n == r and m == s:
                k += pq * f_fn(m, n)
    return GlInfElem._raw({key: v for key, v in acc.items() if v}, k)


def psi_bilinear(a: GlInfElem, b: GlInfElem) -> Fraction:
    total = ZERO
    for (i, j), p in a.terms.items():
        q = b.coeff((j, i))
        if q:
            total += p * q * f_fn(i, j)
    return total


def gl_degree(a: GlInfElem) -> int | str:
    """Principal degree ``j - i``; ``"mixed"`` or ``"zero"`` otherwise.

    ``K`` has degree 0, so a central part only fits degree-0 elements.
    """
    if a.is_zero():
        return "zero"
    degrees = {j - i for (i, j) in a.terms}
    if a.central:
        degrees.add(0)
    if len(degrees) == 1:
        return degrees.pop()
    return "mixed"


def E_generating(m: int, lo: int, hi: int, var: str = "x") -> TruncSeries:
    """``E(m,x) = sum_n E[m,m+n] x^{-n}`` cut to ``n`` in ``[lo, hi]``.

    A two-sided distribution, so the result is known exactly only on the
    exponents ``-hi .. -lo``.
    """
    terms = {(-n,): E(m, m + n) for n in range(lo, hi + 1)}
    return TruncSeries((var,), terms, lo=(-hi,), hi=(-lo,), bounded=(False,))


def lemma_commutator_sides(m: int, n: int, lo: int, hi: int):
    """Both sides of the generating-function commutator for ``E(m,.)``, ``E(n,.)``.

    Returns ``(lhs, rhs)`` as series in ``(x1, x2)``:

    * ``lhs`` collects ``[E[m,m+r], E[n,n+s]]`` at ``x1^{-r} x2^{-s}`` for
      ``r, s`` in ``[lo, hi]``;
    * ``rhs`` is ``(x1/x2)^{m-n} (E(m,x2) - E(n,x1) + f(m,n) K)`` assembled
      from cut-off generating functions by the series engine.

    Both sides are known on the exponent box ``[-hi, -lo]^2``.
    """
    vars2 = ("x1", "x2")
    lhs_terms = {}
    for r in range(lo, hi + 1):
        for s in range(lo, hi + 1):
            c = gl_bracket(E(m, m + r), E(n, n + s))
            if c:
                lhs_terms[(-r, -s)] = c
    lhs = TruncSeries(vars2, lhs_terms, lo=(-hi, -hi), hi=(-lo, -lo), bounded=(False, False))

    d = m - n
    # widen the cut so the (x1/x2)^d shift still covers the box
    w_lo, w_hi = lo - abs(d), hi + abs(d)
    inner = embed(E_generating(m, w_lo, w_hi, "x2"), vars2) - embed(
        E_generating(n, w_lo, w_hi, "x1"), vars2
    )
    kf = f_fn(m, n)
    if kf:
        inner = inner + TruncSeries(vars2, {(0, 0): GlInfElem(central=kf)}, lo=(0, 0))
    rhs = monomial(vars2, (d, -d)) * inner
    return lhs, rhs
