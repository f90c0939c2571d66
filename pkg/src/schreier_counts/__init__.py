"""Exact counts of unions of at most k Schreier sets.

A set F of positive integers is Schreier when |F| <= min F.  This package
counts the sets with maximum n that are unions of at most k Schreier sets,
three ways: exhaustive enumeration, a Pascal-like table construction, and
the linear recurrence with characteristic polynomial p_k.
"""
from .oracle import (ENUMERATION_LIMIT, BruteRow, EnumerationLimitError, brute_d_value, brute_r_row,
                     brute_s, brute_t, enumerate_family, partition_search)
from .polynomial import IntPolynomial
from .recurrence import (InitialValues, check_recurrence, closed_form_initials, compose_x_xminus1,
                         eval_int, extend_by_recurrence, initial_sums, initial_sums_check,
                         leading_coeff_check, schreier_char_poly)
from .sequences import compute_sequence
from .sets import (INFINITY, MAX_ELEMENT, SchreierError, as_finite_set, d_value, greedy_decompose,
                   is_k_schreier, is_maximal_schreier, is_schreier)
from .tables import (CountSequence, RTable, build_r_table, diagonal_from_column, pascal_fill, r0_column,
                     s_sequence, t_sequence)

__version__ = "0.1.0"
