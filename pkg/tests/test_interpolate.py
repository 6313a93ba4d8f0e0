"""Interpolation operator: contractions, S images, log, shifts, expansions."""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from izeta.algebra import (
    FormalSum,
    Index,
    RatPoly,
    T,
    Word,
    harmonic_product,
    t_harmonic_product,
)
from izeta.interpolate import (
    d_dt,
    enumerate_contractions,
    index_expansions,
    log_s,
    s_alpha,
    s_poly,
    s_t,
    taylor_shift,
    zeta_t_words,
)

from helpers import (
    dictpoly_to_sum,
    interpolation_by_recursion,
    star_fillings,
    words_up_to_weight,
)

ONE = FormalSum.unit()


def w(*letters):
    return FormalSum.from_word(Word(letters))


word_st = st.lists(st.integers(min_value=1, max_value=4), min_size=1, max_size=5).map(tuple)


# ------------------------------------------------------------ contractions

def test_contractions_of_length_two_word():
    got = [(c.sigma, word) for c, word in enumerate_contractions(Word((2, 1)))]
    assert got == [(0, Word((2, 1))), (1, Word((3,)))]


def test_contractions_of_length_three_word_in_stated_order():
    got = [(c.sigma, word) for c, word in enumerate_contractions(Word((1, 1, 1)))]
    assert got == [
        (0, Word((1, 1, 1))),
        (1, Word((1, 2))),
        (1, Word((2, 1))),
        (2, Word((3,))),
    ]


def test_contractions_of_single_letter():
    got = [(c.sigma, word) for c, word in enumerate_contractions(Word((5,)))]
    assert got == [(0, Word((5,)))]


def test_contractions_of_unit_rejected():
    with pytest.raises(ValueError, match="no contractions"):
        enumerate_contractions(Word(()))


@given(word_st)
@settings(max_examples=60, deadline=None)
def test_contraction_count_sigma_and_weight(letters):
    word = Word(letters)
    entries = enumerate_contractions(word)
    assert len(entries) == 2 ** (len(letters) - 1)
    for contraction, contracted in entries:
        assert contracted.weight == word.weight
        assert contraction.sigma == len(letters) - len(contracted.letters)


# ------------------------------------------------------------------- s_t

def test_s_t_worked_examples():
    assert s_t(w(2, 1)) == w(2, 1) + T * w(3)
    assert s_t(w(1, 1, 1)) == w(1, 1, 1) + T * (w(1, 2) + w(2, 1)) + (T * T) * w(3)
    assert s_t(ONE) == ONE
    assert s_t(w(5)) == w(5)


@given(word_st)
@settings(max_examples=80, deadline=None)
def test_s_t_agrees_with_head_recursion(letters):
    assert s_t(FormalSum.from_word(Word(letters))) == dictpoly_to_sum(
        interpolation_by_recursion(letters)
    )


def test_s_t_is_linear_over_polynomial_coefficients():
    e = T * w(2, 1) + 3 * w(1, 1)
    assert s_t(e) == T * s_t(w(2, 1)) + 3 * s_t(w(1, 1))


def test_s_alpha_examples():
    assert s_alpha(w(2, 1, 1), 0) == w(2, 1, 1)
    assert s_alpha(w(2, 1), 1) == w(2, 1) + w(3)
    assert s_alpha(w(3, 3), Fraction(1, 2)) == w(3, 3) + Fraction(1, 2) * w(6)


def test_s_poly_with_polynomial_parameter_inverts_s_t():
    for word in words_up_to_weight(6):
        image = s_t(FormalSum.from_word(word))
        assert s_poly(image, RatPoly({1: -1})) == FormalSum.from_word(word)


# ------------------------------------------------------------------ log_s

def test_log_s_examples():
    assert log_s(Word((1, 1, 1))) == w(1, 2) + w(2, 1)
    assert log_s(Word((5,))) == FormalSum.zero()
    assert log_s(Word((2, 1))) == w(3)


def test_log_series_equals_t_times_log_s():
    for word in words_up_to_weight(6, max_length=6):
        e = FormalSum.from_word(word)
        series = FormalSum.zero()
        power = e
        for j in range(1, len(word.letters) + 1):
            power = s_t(power) - power
            series = series + Fraction((-1) ** (j + 1), j) * power
        assert series == T * log_s(word)


# ----------------------------------------------------------- derivatives

def test_d_dt_examples():
    assert d_dt(RatPoly({2: 1}) * w(3)) == RatPoly({1: 2}) * w(3)
    assert d_dt(w(2, 1) + T * w(3)) == w(3)
    assert d_dt(w(4, 2)) == FormalSum.zero()


def test_derivative_law_on_small_words():
    for word in words_up_to_weight(6, max_length=6):
        e = FormalSum.from_word(word)
        assert d_dt(s_t(e)) == s_t(log_s(word))


# ----------------------------------------------------------- taylor_shift

def test_taylor_shift_examples():
    e = w(2, 1) + T * w(3)
    assert taylor_shift(e, 0) == [w(2, 1), w(3)]
    assert taylor_shift(e, 1) == [w(2, 1) + w(3), w(3)]
    assert taylor_shift(w(4), Fraction(2, 3)) == [w(4)]


@given(word_st, st.fractions(min_value=-2, max_value=2, max_denominator=4))
@settings(max_examples=40, deadline=None)
def test_taylor_shift_reconstructs_the_element(letters, alpha):
    e = s_t(FormalSum.from_word(Word(letters)))
    pieces = taylor_shift(e, alpha)
    shifted = RatPoly({0: -alpha, 1: 1})  # t - alpha
    rebuilt = FormalSum.zero()
    power = RatPoly({0: 1})
    for piece in pieces:
        assert piece.is_t_free()
        rebuilt = rebuilt + power * piece
        power = power * shifted
    assert rebuilt == e


# ----------------------------------------------------- index expansions

def test_index_expansions_of_two_one():
    got = sorted((idx.parts, sigma) for idx, sigma in index_expansions(Index((2, 1))))
    assert got == [((2, 1), 0), ((3,), 1)]


def test_index_expansions_match_filling_oracle():
    for parts in [(2,), (2, 1), (2, 2), (3, 1, 2), (2, 1, 1, 1)]:
        got = sorted((idx.parts, sigma) for idx, sigma in index_expansions(Index(parts)))
        assert got == sorted(star_fillings(parts))


def test_zeta_t_words_equals_operator_image():
    for parts in [(2,), (2, 1), (4, 1, 2), (2, 1, 1)]:
        assert zeta_t_words(Index(parts)) == s_t(FormalSum.from_word(Index(parts).to_word()))


# ------------------------------------------------- operator vs products

@given(word_st, word_st)
@settings(max_examples=25, deadline=None)
def test_interpolation_intertwines_the_products(u, v):
    eu, ev = FormalSum.from_word(Word(u)), FormalSum.from_word(Word(v))
    assert s_t(t_harmonic_product(eu, ev)) == harmonic_product(s_t(eu), s_t(ev))
