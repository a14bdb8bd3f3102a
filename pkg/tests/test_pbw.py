import random
from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, strategies as st

from glinf_qva.glinf_e import EB, B, K, e_bracket
from glinf_qva.pbw import (
    VACUUM, ModuleParams, PBWVector, VermaModule, act, b_vector, composite_mode, mode_apply,
    monomial_vector, reduce_word, vertex_series,
)
from glinf_qva.suites import sample_pbw

LEVELS = [0, 1, 2, Fraction(-1, 2)]


def test_zero_mode_kills_vacuum_module():
    for level in LEVELS:
        assert act(B(0, 0), b_vector(1), ModuleParams.make(level)).is_zero()


def test_ordered_creation_is_insertion():
    assert act(B(0, -1), b_vector(1)) == monomial_vector([(0, -1), (1, -1)])
    assert mode_apply(0, -1, b_vector(1)) == monomial_vector([(0, -1), (1, -1)])


def test_reordering_example():
    params = ModuleParams.make(2)
    got = act(B(1, -1), b_vector(0), params)
    want = monomial_vector([(0, -1), (1, -1)]) - b_vector(0) + b_vector(1) - VACUUM.scale(2)
    assert got == want
    assert str(got) == "B[0,-1]B[1,-1].1 - B[0,-1].1 + B[1,-1].1 - 2.1"
    # independent oracle: the rewriting normalizer on the word B(1,-1) B(0,-1)
    assert reduce_word([B(1, -1), B(0, -1)], params) == want
    # and by hand: [B(1,-1), B(0,-1)] = -(EB(0,-1,1) - EB(1,-1,-1) + K)
    corr = act(-e_bracket(B(0, -1), B(1, -1)), VACUUM, params)
    assert corr == -b_vector(0) + b_vector(1) - VACUUM.scale(2)


def test_zero_mode_weight():
    params = ModuleParams.make(0, {3: "5/2"})
    got = act(B(3, 0), VACUUM, params)
    assert got == VACUUM.scale(Fraction(5, 2))
    assert str(got) == "5/2 .1"


def test_mode_apply_examples():
    assert mode_apply(5, -1, VACUUM) == b_vector(5)
    v = monomial_vector([(1, -2), (0, -1)]) + monomial_vector([(2, -1)], 3)
    assert mode_apply(0, 3, v).is_zero()


def test_composite_mode_examples():
    assert composite_mode(0, 2, 7).is_zero()
    assert composite_mode(1, 0, 0, ModuleParams.make(3)).is_zero()
    assert composite_mode(2, -1, 1) == monomial_vector([(1, -1), (2, -1)]) + (
        act(e_bracket(B(2, -1), B(1, -1)), VACUUM)
    )


def test_vertex_series_examples():
    M = VermaModule(ModuleParams.make(1))
    s = M.vertex_series(0, VACUUM, -3, 3)
    for n in range(0, 4):
        assert s.coefficient((-n - 1,)) == 0
    assert s.coefficient((0,)) == b_vector(0)
    assert s.coefficient((2,)) == monomial_vector([(0, -3)])
    assert vertex_series(4, VACUUM, ModuleParams(), -1, 0).coefficient((0,)) == b_vector(4)


def test_level_acts_by_scalar():
    for level in LEVELS:
        v = monomial_vector([(0, -2), (1, -1)]) + VACUUM
        assert act(K, v, ModuleParams.make(level)) == v.scale(level)


def test_noncanonical_vectors_rejected():
    with pytest.raises(ValueError):
        PBWVector({((0, -1), (1, -2)): 1})
    with pytest.raises(ValueError):
        monomial_vector([(0, 0)])


def test_rewriting_strategies_agree_on_long_words():
    params = ModuleParams.make(Fraction(3, 2), {0: 1, -1: Fraction(1, 3)})
    word = [B(1, 0), EB(0, -1, 2), B(-1, -2), B(2, 1), B(0, -1)]
    left = reduce_word(word, params, "left")
    assert left == reduce_word(word, params, "right")
    M = VermaModule(params)
    v = VACUUM
    for letter in reversed(word):
        v = M.act(letter, v)
    assert v == left


gens = st.tuples(st.integers(-2, 2), st.integers(-3, 2))


@given(st.lists(gens, min_size=1, max_size=4), st.sampled_from(LEVELS))
def test_recursion_matches_rewriting(word, level):
    params = ModuleParams.make(level)
    M = VermaModule(params)
    assert M.apply_word(word) == reduce_word([B(*g) for g in word], params)


@given(gens, gens, st.integers(0, 10_000), st.sampled_from(LEVELS))
def test_representation_property(a, b, seed, level):
    M = VermaModule(ModuleParams.make(level, {1: 2}))
    v = sample_pbw(random.Random(seed), 3)
    X, Y = B(*a), B(*b)
    assert M.act(e_bracket(X, Y), v) == M.act(X, M.act(Y, v)) - M.act(Y, M.act(X, v))


def test_representation_with_twisted_elements():
    M = VermaModule(ModuleParams.make(2, {0: 1}))
    rng = random.Random(7)
    elems = [EB(1, -2, 1), EB(0, -1, -2) + B(2, 0), B(-1, 1), EB(2, 0, 3)]
    for X, Y in product(elems, repeat=2):
        v = sample_pbw(rng, 2)
        assert M.act(e_bracket(X, Y), v) == M.act(X, M.act(Y, v)) - M.act(Y, M.act(X, v))


@pytest.mark.parametrize("level", LEVELS)
def test_nonnegative_modes_annihilate(level):
    M = VermaModule(ModuleParams.make(level))
    rng = random.Random(11)
    for _ in range(4):
        v = sample_pbw(rng, 4)
        for m, r in product(range(-3, 4), range(0, 3)):
            assert M.mode_apply(m, r, v).is_zero()


def test_positive_modes_annihilate_with_weights():
    M = VermaModule(ModuleParams.make(1, {0: 3, 2: -1}))
    v = monomial_vector([(0, -2), (2, -1)])
    assert M.annihilation_bound(v) == 1
    assert M.mode_apply(2, 0, VACUUM) == VACUUM.scale(-1)
    for m, r in product(range(-3, 4), range(1, 3)):
        assert M.mode_apply(m, r, v).is_zero()


def test_memo_cache_is_transparent():
    params = ModuleParams.make(2)
    warm = VermaModule(params)
    v = sample_pbw(random.Random(3), 3)
    for a in [(0, -1), (1, 0), (2, -2)]:
        warm.act(B(*a), v)
    assert warm.cache_size() > 0
    for a in [(0, -1), (1, 0), (2, -2)]:
        assert warm.act(B(*a), v) == VermaModule(params).act(B(*a), v)
