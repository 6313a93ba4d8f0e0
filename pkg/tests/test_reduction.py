"""Exact rational span certificates for the reduction arguments."""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from izeta.algebra import FormalSum, RatPoly, T, Word
from izeta.identities import sum_poly, sum_words
from izeta.interpolate import s_t, taylor_shift
from izeta.reduction import span_membership, verify_csf_reduction, verify_sf_reduction

from helpers import words_up_to_weight


def w(*letters):
    return FormalSum.from_word(Word(letters))


def test_scalar_multiple_of_single_generator():
    g = w(2, 1) - w(3)
    cert = span_membership(2 * g, [g])
    assert cert.success and cert.coefficients == [Fraction(2)]
    assert cert.verify()


def test_zero_target_gets_zero_coefficients():
    cert = span_membership(FormalSum.zero(), [w(2), w(3)])
    assert cert.success and cert.coefficients == [Fraction(0), Fraction(0)]
    assert cert.verify()


def test_generator_itself_is_certified_with_unit_coefficient():
    g1 = sum_words(4, 2) - w(4)
    g2 = sum_words(4, 1) - w(4)
    cert = span_membership(g1, [g1, g2])
    assert cert.coefficients == [Fraction(1), Fraction(0)]
    assert cert.verify()


def test_membership_failure_is_a_value_not_an_error():
    cert = span_membership(w(2), [w(3)])
    assert not cert.success
    assert cert.coefficients is None
    assert not cert.verify()
    assert cert.to_record()["coefficients"] == "FAILURE"
    assert "FAILURE" in str(cert)


def test_rejects_targets_that_still_carry_t():
    with pytest.raises(ValueError):
        span_membership(T * w(2), [w(2)])
    with pytest.raises(ValueError):
        span_membership(w(2), [T * w(2)])


def test_mixed_combination_recovered():
    g1 = w(2, 2) + 3 * w(4)
    g2 = w(2, 2) - w(3, 1)
    target = Fraction(1, 2) * g1 - 2 * g2
    cert = span_membership(target, [g1, g2])
    assert cert.success and cert.verify()
    assert cert.coefficients == [Fraction(1, 2), Fraction(-2)]


rational_st = st.fractions(min_value=-3, max_value=3, max_denominator=4)


@given(st.lists(rational_st, min_size=1, max_size=4), st.data())
@settings(max_examples=40, deadline=None)
def test_random_combinations_always_verify(coeffs, data):
    pool = words_up_to_weight(4)
    generators = []
    for _ in coeffs:
        picks = data.draw(st.lists(st.sampled_from(pool), min_size=1, max_size=3))
        g = FormalSum.zero()
        for word in picks:
            g = g + FormalSum.from_word(word)
        generators.append(g)
    target = FormalSum.zero()
    for c, g in zip(coeffs, generators):
        target = target + c * g
    cert = span_membership(target, generators)
    assert cert.success and cert.verify()


def test_certificate_record_uses_exact_rationals():
    g = w(2, 1) - w(3)
    record = span_membership(Fraction(-3, 7) * g, [g]).to_record()
    assert record["coefficients"] == ["-3/7"]


def test_sum_formula_reduction_small_cases_match_hand_expansion():
    certs = {c.label: c for c in verify_sf_reduction(3)}
    assert all(c.success and c.verify() for c in certs.values())
    t0 = certs["sum-formula k=3 n=2 power=0"]
    assert t0.target == sum_words(3, 2) - w(3)
    assert t0.coefficients[1] == Fraction(1)  # the x_{3,2} - z3 generator itself
    t1 = certs["sum-formula k=3 n=2 power=1"]
    assert t1.target.is_zero()
    assert all(c == 0 for c in t1.coefficients)


def test_sum_formula_reduction_k4_linear_power_vanishes():
    certs = {c.label: c for c in verify_sf_reduction(4)}
    assert certs["sum-formula k=4 n=2 power=1"].target.is_zero()
    assert all(c.success and c.verify() for c in certs.values())


@pytest.mark.parametrize("k", range(2, 7))
def test_sum_formula_reduction_succeeds(k):
    for cert in verify_sf_reduction(k):
        assert cert.success and cert.verify(), cert.label


@pytest.mark.parametrize("k", range(2, 6))
def test_cyclic_reduction_succeeds(k):
    for cert in verify_csf_reduction(k):
        assert cert.success and cert.verify(), cert.label


def test_cyclic_reduction_base_case_is_the_generator():
    certs = verify_csf_reduction(2)
    assert len(certs) >= 1
    assert all(c.success for c in certs)


@pytest.mark.parametrize("k", range(2, 7))
def test_sum_formula_reduction_after_shift_to_one(k):
    for cert in verify_sf_reduction(k, alpha=1):
        assert cert.success and cert.verify(), cert.label


@pytest.mark.parametrize("k", range(2, 5))
def test_cyclic_reduction_after_shift_to_one(k):
    for cert in verify_csf_reduction(k, alpha=1):
        assert cert.success and cert.verify(), cert.label


def test_reduction_targets_really_are_the_shift_coefficients():
    k = 4
    for n in range(1, k):
        expansion = s_t(sum_words(k, n)) - sum_poly(k, n) * w(k)
        pieces = taylor_shift(expansion, 0)
        labels = {c.label: c for c in verify_sf_reduction(k)}
        for power, piece in enumerate(pieces):
            cert = labels[f"sum-formula k={k} n={n} power={power}"]
            assert cert.target == piece
