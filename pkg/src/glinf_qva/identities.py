"""Series-side oracles for the generating-function relations of the twisted algebra.

The bracket of ``B_t(m,x1) = sum_r B(m,r) x1^{-r-1}`` with ``B_t(n,x2)`` is

    e^{(m-n)(x1-x2)} (B_t(m,x2) - B_t(n,x1) + f(m,n) K).

Its coefficients are elements like ``e_m (x) t^r e^{ct}`` whose mode
expansions are infinite upward.  Projecting every coefficient onto the modes
``<= P`` commutes with multiplication by scalar series, and after the
projection both generating functions are bounded below in ``x``.  Hence the
relation can be checked exactly with ordinary truncated Laurent series.
"""

from __future__ import annotations

from .exppoly import ep_mode_window
from .glinf import f_fn
from .glinf_e import B, GlInfEElem, K, e_bracket
from .pbw import PBWVector, VermaModule
from .series import TruncSeries, check_identity, embed, ts_exp_diff


def mode_project(X: GlInfEElem, top: int) -> GlInfEElem:
    """Expand every ``e_m (x) g`` into modes ``B(m,p)`` and keep ``p <= top``.

    ``K`` is not a mode and is kept as is.
    """
    terms: dict = {}
    for m, g in X.parts.items():
        low = g.min_power()
        if low > top:
            continue
        for p, q in ep_mode_window(g, low, top):
            if q:
                terms[(m, p, 0)] = terms.get((m, p, 0), 0) + q
    return GlInfEElem(terms, X.central)


def projected_generating(m: int, top: int, hi: int, var: str) -> TruncSeries:
    """``sum_{p <= top} B(m,p) x^{-p-1}`` known up to ``x^hi``."""
    terms = {(-p - 1,): B(m, p) for p in range(-hi - 1, top + 1)}
    return TruncSeries((var,), terms, lo=(-top - 1,), hi=(hi,))


def eq33_sides(m: int, n: int, modes: tuple[int, int] = (-4, 4), top: int | None = None):
    """Both sides of the twisted generating-function bracket, projected to modes ``<= top``.

    ``lhs`` holds ``[B(m,r), B(n,s)]`` (closed-form bracket, then projected)
    at ``x1^{-r-1} x2^{-s-1}`` for ``r, s`` in ``modes``; ``rhs`` is built from
    the exponential factor and projected generating functions.  Returns
    ``(lhs, rhs, lo, hi)`` with the exponent box to compare on.
    """
    lo_mode, hi_mode = modes
    top = hi_mode if top is None else top
    if top < hi_mode:
        raise ValueError("projection must keep every mode of the window")
    vars2 = ("x1", "x2")
    box_lo = (-hi_mode - 1, -hi_mode - 1)
    box_hi = (-lo_mode - 1, -lo_mode - 1)

    lhs_terms = {}
    for r in range(lo_mode, hi_mode + 1):
        for s in range(lo_mode, hi_mode + 1):
            c = mode_project(e_bracket(B(m, r), B(n, s)), top)
            if c:
                lhs_terms[(-r - 1, -s - 1)] = c
    lhs = TruncSeries(vars2, lhs_terms, lo=(-top - 1, -top - 1), hi=box_hi)

    # e^{d(x1-x2)} must reach total degree box_hi[0] + box_hi[1] + 2(top + 1)
    reach = box_hi[0] + box_hi[1] + 2 * (top + 1)
    inner = (
        embed(projected_generating(m, top, reach, "x2"), vars2)
        - embed(projected_generating(n, top, reach, "x1"), vars2)
    )
    kf = f_fn(m, n)
    if kf:
        inner = inner + TruncSeries(vars2, {(0, 0): K.scale(kf)}, lo=(0, 0))
    rhs = ts_exp_diff(m - n, reach) * inner
    return lhs, rhs, box_lo, box_hi


def check_eq33(m: int, n: int, modes: tuple[int, int] = (-4, 4)):
    lhs, rhs, lo, hi = eq33_sides(m, n, modes)
    return check_identity(lhs, rhs, hi=hi, lo=lo)


def thm310_sides(module: VermaModule, m: int, n: int, v: PBWVector, modes: tuple[int, int] = (-4, 4)):
    """Generator-level commutator relation for ``Y(b^(m),x) = B(m,x)`` on ``v``.

    ``lhs`` holds ``[B(m,r), B(n,s)] v`` at ``x1^{-r-1} x2^{-s-1}`` computed as
    a double action; ``rhs`` is
    ``e^{(m-n)(x1-x2)} (Y(b^(m),x2) v - Y(b^(n),x1) v + f(m,n) level v)``.
    Returns ``(lhs, rhs, lo, hi)``.
    """
    lo_mode, hi_mode = modes
    vars2 = ("x1", "x2")
    box_lo = (-hi_mode - 1, -hi_mode - 1)
    box_hi = (-lo_mode - 1, -lo_mode - 1)
    lhs_terms = {}
    for r in range(lo_mode, hi_mode + 1):
        for s in range(lo_mode, hi_mode + 1):
            a = module.mode_apply(m, r, module.mode_apply(n, s, v))
            b = module.mode_apply(n, s, module.mode_apply(m, r, v))
            if a - b:
                lhs_terms[(-r - 1, -s - 1)] = a - b
    lhs = TruncSeries(vars2, lhs_terms, lo=box_lo, hi=box_hi)

    N = module.annihilation_bound(v)
    reach = box_hi[0] + box_hi[1] + 2 * N
    inner = embed(module.vertex_series_restricted(m, v, -reach - 1, "x2"), vars2) - embed(
        module.vertex_series_restricted(n, v, -reach - 1, "x1"), vars2
    )
    kf = f_fn(m, n) * module.level
    if kf and v:
        inner = inner + TruncSeries(vars2, {(0, 0): v.scale(kf)}, lo=(0, 0))
    rhs = ts_exp_diff(m - n, reach) * inner
    return lhs, rhs, box_lo, box_hi


def check_thm310(module: VermaModule, m: int, n: int, v: PBWVector, modes=(-4, 4)):
    lhs, rhs, lo, hi = thm310_sides(module, m, n, v, modes)
    return check_identity(lhs, rhs, hi=hi, lo=lo)


def exp_unit(order: int, a: int) -> TruncSeries:
    """``e^{a(x1-x2)} e^{-a(x1-x2)}``, which must be ``1`` up to ``order``."""
    return ts_exp_diff(a, order) * ts_exp_diff(-a, order)


