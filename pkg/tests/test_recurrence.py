from math import comb

import pytest

from schreier_counts.oracle import brute_r_row
from schreier_counts.polynomial import IntPolynomial
from schreier_counts.recurrence import (check_recurrence, closed_form_initials, extend_by_recurrence,
                                        first_nonzero_offset, initial_sums, initial_sums_check,
                                        schreier_char_poly)
from schreier_counts.sets import SchreierError
from schreier_counts.tables import CountSequence, build_r_table, r0_column, s_sequence

FIB = (1, 1, 2, 3, 5, 8, 13, 21)


def test_fibonacci_satisfies_p1():
    assert check_recurrence(FIB, schreier_char_poly(1)) == [0] * 6


def test_powers_of_two_are_not_constant():
    assert check_recurrence((1, 2, 4, 8, 16), schreier_char_poly(0)) == [1, 2, 4, 8]


def test_k2_first_column_to_twenty():
    col = r0_column(build_r_table(2, 20))
    residuals = check_recurrence(col, schreier_char_poly(2))
    assert residuals == [0] * 16
    assert first_nonzero_offset(residuals) is None


def test_first_nonzero_offset_localizes():
    bad = list(FIB)
    bad[5] += 1
    residuals = check_recurrence(bad, schreier_char_poly(1))
    assert first_nonzero_offset(residuals) == 4


def test_check_recurrence_too_short():
    with pytest.raises(SchreierError, match="too short"):
        check_recurrence((1, 2), schreier_char_poly(1))


def test_extend_fibonacci():
    assert extend_by_recurrence((1, 1), schreier_char_poly(1), 8).values == FIB


def test_extend_matches_tables():
    p2 = schreier_char_poly(2)
    assert extend_by_recurrence((1, 2, 4, 7), p2, 10) == s_sequence(2, 10)
    col = r0_column(build_r_table(2, 20))
    assert extend_by_recurrence(CountSequence((0, 0, 1, 1), "r0"), p2, 20) == col


def test_extend_requires_monic():
    with pytest.raises(SchreierError, match="requires monic polynomial"):
        extend_by_recurrence((1, 1), IntPolynomial((-1, -1, 2)), 5)
    with pytest.raises(SchreierError):
        extend_by_recurrence((1,), schreier_char_poly(1), 5)


def test_closed_form_examples():
    assert closed_form_initials(2).r0[4] == comb(2, 2) + 1 == 2
    assert closed_form_initials(3).s[7] == 127
    assert closed_form_initials(2).t[4] == 4


def test_closed_form_k1_only_has_s():
    with pytest.raises(SchreierError):
        closed_form_initials(1)
    assert closed_form_initials(1, ("s",)).s == (1, 1, 2)
    with pytest.raises(SchreierError):
        closed_form_initials(0, ("s",))


@pytest.mark.parametrize("k", [2, 3])
def test_closed_forms_match_enumeration(k):
    iv = closed_form_initials(k)
    n_max = 2**k + 1
    rows = [brute_r_row(k, n) for n in range(1, n_max + 1)]
    r0 = tuple(row.finite_counts[0] for row in rows)
    assert iv.r0 == r0
    assert iv.t == tuple(sum(r0[:n]) for n in range(1, n_max + 1))
    assert iv.s == tuple(row.total for row in rows)


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_initial_sums_vanish(k):
    assert initial_sums(k) == (0, 0, 0, 0)
    assert initial_sums_check(k)
    if k >= 2:
        assert initial_sums(k, "closed_form") == (0, 0, 0, 0)


def test_initial_sums_unknown_source():
    with pytest.raises(SchreierError):
        initial_sums(2, "guess")
