import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from glinf_qva.exppoly import ExpPoly
from glinf_qva.glinf import GlInfElem
from glinf_qva.glinf_e import EB, GlInfEElem, K
from glinf_qva.grammar import (
    ParseError, parse_exppoly, parse_gl, parse_gl_e, parse_module, parse_params, parse_pbw,
    parse_word, parse_zoo_vector,
)
from glinf_qva.pbw import VACUUM, ModuleParams
from glinf_qva.suites import ZOO_KINDS, sample_pbw, sample_zoo

idx = st.integers(-12, 12)
q = st.fractions(-5, 5, max_denominator=7)


@st.composite
def gl_elems(draw):
    terms = draw(st.dictionaries(st.tuples(idx, idx), q, max_size=5))
    return GlInfElem(terms, draw(q))


@st.composite
def e_elems(draw):
    basis = st.builds(EB, idx, st.integers(-6, 6), st.integers(-4, 4), q)
    return sum(draw(st.lists(basis, max_size=4)), GlInfEElem()) + K.scale(draw(q))


@st.composite
def exppolys(draw):
    return ExpPoly(draw(st.dictionaries(st.tuples(st.integers(-5, 5), st.integers(-4, 4)), q, max_size=4)))


@given(gl_elems())
def test_gl_round_trip(X):
    text = str(X)
    assert parse_gl(text) == X
    assert str(parse_gl(text)) == text


@given(e_elems())
def test_gl_e_round_trip(X):
    text = str(X)
    assert parse_gl_e(text) == X
    assert str(parse_gl_e(text)) == text


@given(exppolys())
def test_exppoly_round_trip(g):
    text = str(g)
    assert parse_exppoly(text) == g
    assert str(parse_exppoly(text)) == text


@given(st.integers(0, 10_000), st.integers(0, 4))
def test_pbw_round_trip(seed, depth):
    v = sample_pbw(random.Random(seed), depth) + VACUUM.scale(Fraction(seed % 7, 3))
    text = str(v)
    assert parse_pbw(text) == v
    assert str(parse_pbw(text)) == text


@given(st.integers(0, len(ZOO_KINDS) - 1), st.integers(0, 10_000))
def test_zoo_round_trip(k, seed):
    module = ZOO_KINDS[k]
    w = sample_zoo(module, random.Random(seed), terms=3)
    text = module.format(w)
    assert parse_zoo_vector(module, text) == w
    assert module.format(parse_zoo_vector(module, text)) == text


@pytest.mark.parametrize("module", ZOO_KINDS, ids=lambda m: m.selector)
def test_selector_round_trip(module):
    assert parse_module(module.selector) == module
    assert parse_module(module.selector).selector == module.selector


def test_canonical_strings():
    for text in ["E[0,0] - E[1,1] + K", "0", "-3/2*E[-1,4]", "K"]:
        assert str(parse_gl(text)) == text
    for text in ["EB[0;-1;1] - EB[1;-1;-1] + K", "B[0,-1]", "2*EB[3;0;-2] - 1/2*K"]:
        assert str(parse_gl_e(text)) == text
    for text in ["B[0,-1]B[1,-1].1 - B[0,-1].1 + B[1,-1].1 - 2.1", "5/2 .1", "1", "0"]:
        assert str(parse_pbw(text)) == text


def test_noncanonical_inputs_normalize():
    assert str(parse_gl("E[1,1] + E[0,0] + E[0,0]")) == "2*E[0,0] + E[1,1]"
    assert parse_gl_e("B[0,-1]") == parse_gl_e("EB[0;-1;0]")
    assert parse_gl("E[0,1] - E[0,1]") == GlInfElem()


def test_parse_error_positions():
    with pytest.raises(ParseError) as exc:
        parse_gl("E[0,1] + E[1,")
    assert exc.value.position == len("E[0,1] + E[1,")
    with pytest.raises(ParseError) as exc:
        parse_gl("E[0,1] ? K")
    assert exc.value.position == 7
    with pytest.raises(ParseError) as exc:
        parse_pbw("B[1,-1]B[0,-1].1")
    assert "canonical" in str(exc.value)
    with pytest.raises(ParseError):
        parse_pbw("B[0,2].1")
    with pytest.raises(ParseError):
        parse_gl_e("E[0,1]")
    with pytest.raises(ParseError):
        parse_word("K")


def test_word_parsing():
    word = parse_word("B[1,-1] B[0,-1]")
    assert [str(x) for x in word] == ["B[1,-1]", "B[0,-1]"]
    assert [str(x) for x in parse_word("EB[0;-1;2]")] == ["EB[0;-1;2]"]


def test_params():
    p = parse_params("2", '{"3": "5/2"}')
    assert p == ModuleParams.make(2, {3: Fraction(5, 2)})
    assert parse_params("-1/2").level == Fraction(-1, 2)
    for bad in ['{"3": "x"}', "[1]", "{"]:
        with pytest.raises(ValueError):
            parse_params("0", bad)
    with pytest.raises(ValueError):
        parse_params("1.5.2")


def test_zoo_vector_grammar_details():
    sym2, ext2 = ZOO_KINDS[1], ZOO_KINDS[2]
    assert sym2.format(parse_zoo_vector(sym2, "x[3]*x[1]")) == "x[1]*x[3]"
    assert sym2.format(parse_zoo_vector(sym2, "x[1]^2")) == "x[1]^2"
    assert parse_zoo_vector(ext2, "v[2]^v[1]") == -parse_zoo_vector(ext2, "v[1]^v[2]")
    assert parse_zoo_vector(ext2, "v[1]^v[1]").is_zero()
    with pytest.raises(ParseError):
        parse_zoo_vector(sym2, "x[1]")
    with pytest.raises(ParseError):
        parse_zoo_vector(ZOO_KINDS[0], "3")
    with pytest.raises(ParseError):
        parse_module("sym:x")
