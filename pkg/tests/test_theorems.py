import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from radixroot import (
    DomainError,
    ParseError,
    PreconditionError,
    Rational,
    format_repr,
    fuzz_main1,
    fuzz_main2,
    solve_missing_digit,
    to_finite,
    tf_digital_root,
    verify_cor1,
    verify_lemma_dr,
    verify_main1,
    verify_main2,
)

from oracles import long_division_digits


def recomputed_main1_pass(report):
    labels_equal = all(t.orbit_label == report.orbit_delta for t in report.terms)
    return labels_equal and report.congruence_ok


def recomputed_main2_pass(report):
    if not report.preconditions_ok:
        return False
    congruent = report.repetend_root % (report.base - 1) == 0
    return congruent and report.t_doubleprime_divisible


def test_lemma_dr_examples():
    assert verify_lemma_dr(Rational(1441, 20), 10)
    assert verify_lemma_dr(Rational(0), 12)
    assert verify_lemma_dr(Rational(161, 36), 6)
    with pytest.raises(DomainError):
        verify_lemma_dr(Rational(9, 7), 10)


def test_main1_base_eight_progression():
    report = verify_main1(Rational(21), 2, 8, 4)
    assert report.passed and report.witness is None
    assert report.orbit_delta == 7
    assert [t.root for t in report.terms] == [7, 7, 7, 7, 7]
    rendered = [format_repr(to_finite(t.value, 8)) for t in report.terms]
    assert rendered == ["[25]_8", "[12.4]_8", "[5.2]_8", "[2.5]_8", "[1.24]_8"]
    assert recomputed_main1_pass(report) == report.passed


def test_main1_decimal_unit_orbit():
    report = verify_main1(Rational(7205), 5, 10, 3)
    assert report.passed
    assert report.orbit_delta == 1
    assert [t.root for t in report.terms] == [5, 1, 2, 4]
    assert all(t.orbit_label == 1 for t in report.terms)


def test_main1_terms_track_divided_values():
    report = verify_main1(Rational(9), 2, 10, 2)
    assert [t.value for t in report.terms] == [Rational(9), Rational(9, 2), Rational(9, 4)]
    assert [t.root for t in report.terms] == [
        tf_digital_root(Rational(9) / 2**j, 10).root for j in range(3)
    ]


def test_main1_preconditions():
    with pytest.raises(PreconditionError):
        verify_main1(Rational(9), 3, 10, 1)  # 3 does not divide 10
    with pytest.raises(PreconditionError):
        verify_main1(Rational(9), 10, 10, 1)  # r must be proper
    with pytest.raises(PreconditionError):
        verify_main1(Rational(9), 2, 10, 0)  # at least one division
    with pytest.raises(PreconditionError):
        verify_main1(Rational(0), 2, 10, 1)
    with pytest.raises(DomainError):
        verify_main1(Rational(9, 7), 2, 10, 1)


def test_cor1_examples():
    assert verify_cor1(Rational(21), 2, 8)
    assert verify_cor1(Rational(9), 5, 10)
    assert verify_cor1(Rational(18), 2, 10)


def test_cor1_requires_divisible_root():
    with pytest.raises(PreconditionError):
        verify_cor1(Rational(5), 2, 10)


def test_cor1_holds_across_small_sweep():
    from radixroot import classify

    for k in (4, 6, 8, 9, 10, 12):
        proper = [r for r in range(2, k) if k % r == 0]
        for a in range(1, 61):
            q = Rational(a)
            if tf_digital_root(q, k).root % (k - 1) != 0:
                continue
            for r in proper:
                assert verify_cor1(q, r, k)
                assert classify(q / r, k).is_terminating


def test_main2_decimal_prime_denominators():
    for s, repetend in [(7, (2, 8, 5, 7, 1, 4)), (11, (8, 1)), (13, (6, 9, 2, 3, 0, 7))]:
        report = verify_main2(9, s, 10)
        assert report.passed
        assert report.repetend == repetend
        assert report.repetend_root == 9
        assert report.t_doubleprime_divisible
        assert recomputed_main2_pass(report) == report.passed


def test_main2_base_eight_fifth_powers():
    # digits cross-checked against schoolbook long division
    for s in (5, 25):
        report = verify_main2(21, s, 8)
        assert report.passed
        assert report.repetend_root == 7
        assert list(report.repetend) == long_division_digits(21, s, 8)[2]
    assert verify_main2(21, 5, 8).repetend == (1, 4, 6, 3)


def test_main2_rejects_reducible_fraction():
    with pytest.raises(DomainError):
        verify_main2(9, 12, 10)
    with pytest.raises(PreconditionError):
        verify_main2(0, 7, 10)
    with pytest.raises(PreconditionError):
        verify_main2(9, 1, 10)


def test_main2_precondition_failures_report_not_raise():
    report = verify_main2(1, 8, 10)  # terminating: no repetend at all
    assert not report.passed and not report.preconditions_ok
    assert report.p_part == 1 and "terminates" in report.reason
    report = verify_main2(1, 3, 10)  # p-part shares a factor with 9
    assert not report.passed and not report.preconditions_ok
    assert report.p_part == 3 and "gcd" in report.reason
    assert recomputed_main2_pass(report) == report.passed


def test_main2_degenerate_base_two():
    report = verify_main2(1, 3, 2)
    assert report.passed
    assert report.repetend == (0, 1)
    assert report.repetend_root == 1


@given(st.integers(1, 40), st.integers(2, 40), st.integers(3, 16))
def test_main2_property(n, s, k):
    if math.gcd(n, s) != 1:
        return
    report = verify_main2(n, s, k)
    if report.preconditions_ok:
        assert report.passed
        assert report.repetend_root == k - 1


def test_fuzz_main1_small_sweep_has_no_failures():
    summary = fuzz_main1(range(4, 11), 12, 3)
    assert summary.tested > 0
    assert summary.failed == 0 and summary.failures == ()
    assert summary.passed == summary.tested
    assert summary.skipped == 0 and summary.degenerate == 0


def test_fuzz_main1_is_deterministic_and_worker_invariant():
    one = fuzz_main1(range(8, 13), 10, 2)
    again = fuzz_main1(range(8, 13), 10, 2)
    parallel = fuzz_main1(range(8, 13), 10, 2, workers=2)
    assert one == again == parallel


def test_fuzz_main1_empty_ranges():
    assert fuzz_main1(range(3, 4), 50, 3).tested == 0  # prime base: no proper divisor
    assert fuzz_main1(range(2, 17), 0, 3).tested == 0
    assert fuzz_main1([], 100, 3).tested == 0


def test_fuzz_main2_small_sweep():
    summary = fuzz_main2(range(2, 7), 10, 10)
    assert summary.failed == 0 and summary.failures == ()
    assert summary.tested > 0
    assert summary.skipped > 0
    assert summary.degenerate > 0  # base 2 tuples run but are mod-1 trivial
    coprime_pairs = sum(
        1 for n in range(1, 11) for s in range(2, 11) if math.gcd(n, s) == 1
    )
    assert summary.tested + summary.skipped == 5 * coprime_pairs


def test_fuzz_main2_worker_invariant():
    assert fuzz_main2(range(9, 12), 8, 8) == fuzz_main2(range(9, 12), 8, 8, workers=2)


def test_fuzz_rejects_bad_worker_count():
    with pytest.raises(PreconditionError):
        fuzz_main1(range(4, 5), 5, 2, workers=0)


def test_solve_missing_digit_examples():
    assert solve_missing_digit("2?99561", 10).candidates == (4,)
    result = solve_missing_digit("?", 10)
    assert result.ambiguous and result.candidates == (0, 9)
    assert solve_missing_digit("1?", 10).candidates == (8,)
    assert not solve_missing_digit("1?", 10).ambiguous


def test_solve_missing_digit_other_bases():
    assert solve_missing_digit("F?", 16).candidates == (0, 15)
    assert solve_missing_digit("2?", 8).candidates == (5,)
    assert solve_missing_digit("?", 2).candidates == (0, 1)
    assert solve_missing_digit("10,?", 40).candidates == (29,)


def test_solve_missing_digit_errors():
    with pytest.raises(PreconditionError):
        solve_missing_digit("123", 10)
    with pytest.raises(PreconditionError):
        solve_missing_digit("1??", 10)
    with pytest.raises(ParseError):
        solve_missing_digit("1x?", 10)
    with pytest.raises(ParseError):
        solve_missing_digit("9?", 8)
