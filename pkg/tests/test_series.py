from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import given, strategies as st

from conftest import to_fraction
from glinf_qva.series import (
    IncomparableWindows, TruncSeries, check_identity, embed, monomial, ts_exp, ts_exp_diff, ts_mul,
    ts_substitute_phi,
)
from glinf_qva.zoo import CInf, lemma_sides_on_module

X1, X2, X0 = sp.symbols("x1 x2 x0")
V12 = ("x1", "x2")


def poly(terms, variables=V12, **kw):
    return TruncSeries(variables, terms, **kw)


def test_mul_examples():
    one_plus = poly({(0,): 1, (1,): 1}, ("x1",))
    one_minus = poly({(0,): 1, (1,): -1}, ("x1",))
    assert ts_mul(one_plus, one_minus) == poly({(0,): 1, (2,): -1}, ("x1",))
    assert ts_mul(monomial(("x1",), (-1,)), monomial(("x1",), (1,))) == poly({(0,): 1}, ("x1",))


def test_mul_window_truncates_and_flags():
    s = poly({(0,): 1, (1,): 1}, ("x1",), lo=(0,), hi=(1,))
    sq = s * s
    assert sq.terms == {(0,): 1, (1,): 2}
    assert sq.truncated
    assert not sq.known((2,))


def test_module_by_module_rejected():
    w = CInf().basis(0)
    a = poly({(0,): w}, ("x1",))
    with pytest.raises(TypeError):
        ts_mul(a, a)


def test_two_sided_needs_polynomial_partner():
    wide = poly({(0,): 1}, ("x1",), lo=(-3,), hi=(3,), bounded=(False,))
    series = ts_exp(1, 4, "x1")
    with pytest.raises(ValueError):
        ts_mul(wide, series)
    shifted = wide * monomial(("x1",), (2,))
    assert shifted.lo == (-1,) and shifted.hi == (5,)


def _sympy_coeffs(expr, order):
    p = sp.Poly(sp.series(sp.series(expr, X1, 0, order + 1).removeO(), X2, 0, order + 1).removeO(), X1, X2)
    out = {}
    for (i, j), c in p.terms():
        if i + j <= order:
            out[(i, j)] = to_fraction(c)
    return out


@pytest.mark.parametrize("a", [-2, 1, 3])
def test_exp_diff_matches_sympy(a):
    order = 4
    assert ts_exp_diff(a, order).terms == _sympy_coeffs(sp.exp(a * (X1 - X2)), order)


def test_exp_diff_examples():
    assert ts_exp_diff(0, 5).terms == {(0, 0): 1}
    h = Fraction(1, 2)
    assert ts_exp_diff(1, 2).terms == {(0, 0): 1, (1, 0): 1, (0, 1): -1, (2, 0): h, (1, 1): -1, (0, 2): h}
    plus, minus = ts_exp_diff(1, 4), ts_exp_diff(-1, 4)
    assert minus.terms == {(j, i): c for (i, j), c in plus.terms.items()}


@pytest.mark.parametrize("a", range(-3, 4))
def test_exp_diff_inverse(a):
    prod = ts_exp_diff(a, 6) * ts_exp_diff(-a, 6)
    assert check_identity(prod, poly({(0, 0): 1}, lo=(0, 0)), order=6).passed


def test_substitute_examples():
    diff = poly({(1, 0): 1, (0, 1): -1})
    out = ts_substitute_phi(diff, 3)
    # x2 (e^{x0} - 1) = x2 (x0 + x0^2/2 + x0^3/6)
    assert out.terms == {(1, 1): 1, (2, 1): Fraction(1, 2), (3, 1): Fraction(1, 6)}
    assert ts_substitute_phi(poly({(0, 0): 1}), 2).terms == {(0, 0): 1}
    inv = ts_substitute_phi(poly({(-1, 0): 1}), 1)
    ref = sp.series(sp.exp(-X0), X0, 0, 2).removeO()
    assert inv.terms == {(j, -1): to_fraction(ref.coeff(X0, j)) for j in range(2)}


laurent = st.dictionaries(
    st.tuples(st.integers(-2, 2), st.integers(-2, 2)),
    st.fractions(-3, 3, max_denominator=3).filter(bool),
    min_size=1, max_size=4,
).map(lambda d: poly(d))


@given(laurent, laurent)
def test_substitution_is_multiplicative(a, b):
    order = 3
    lhs = ts_substitute_phi(a * b, order)
    rhs = ts_substitute_phi(a, order) * ts_substitute_phi(b, order)
    assert check_identity(lhs, rhs).passed


@given(laurent, laurent)
def test_product_commutes(a, b):
    assert a * b == b * a


@given(laurent, laurent, laurent)
def test_product_associates(a, b, c):
    assert (a * b) * c == a * (b * c)


def test_check_identity_examples():
    a = poly({(1, 0): 1})
    assert check_identity(a, a).passed
    rep = check_identity(a, poly({(0, 1): 1}))
    assert not rep.passed and rep.exponent == (0, 1)


def test_check_identity_first_mismatch_in_sorted_order():
    rep = check_identity(poly({(1, 0): 1}), poly({(0, 1): 1}))
    assert rep.exponent == min((1, 0), (0, 1))
    assert rep.lhs == 0 and rep.rhs == 1


def test_check_identity_refuses_unknown_window():
    a = poly({(0, 0): 1}, hi=(2, 2))
    with pytest.raises(IncomparableWindows):
        check_identity(a, a, hi=(3, 3))
    with pytest.raises(IncomparableWindows):
        check_identity(a, poly({(0,): 1}, ("x1",)))


def test_lemma_on_natural_module_example():
    M = CInf()
    w = M.basis(2)
    lhs, rhs = lemma_sides_on_module(M, 0, 1, w)
    assert lhs.terms == {(-1, -1): M.basis(0), (-2, 1): -M.basis(1)}
    assert check_identity(lhs, rhs).passed


def test_embed_adds_constant_variable():
    s = ts_exp(2, 3, "x1")
    e = embed(s, V12)
    assert e.terms == {(i, 0): c for (i,), c in s.terms.items()}
    assert e.hi == (3, None)
