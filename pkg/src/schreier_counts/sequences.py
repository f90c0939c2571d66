"""One entry point for the s, r0 and t sequences across the three engines.

* ``dp`` builds the r-table.
* ``brute`` enumerates subsets.
* ``recurrence`` seeds with closed-form initial values and extends with p_k.
"""
from __future__ import annotations

from itertools import accumulate

from .oracle import ENUMERATION_LIMIT, EnumerationLimitError, brute_r_row
from .recurrence import closed_form_initials, extend_by_recurrence, schreier_char_poly
from .sets import SchreierError, _check_k
from .tables import SEQUENCE_LABELS, CountSequence, build_r_table, r0_column, s_sequence, t_sequence

ENGINES = ("dp", "brute", "recurrence")


def _dp(k: int, which: str, count: int) -> CountSequence:
    if which == "s":
        return s_sequence(k, count)
    table = build_r_table(k, count)
    return r0_column(table) if which == "r0" else t_sequence(table)


def _brute(k: int, which: str, count: int, limit: int, jobs: int) -> CountSequence:
    if count > limit:
        raise EnumerationLimitError(
            f"enumeration bound exceeded: count={count} > limit {limit}")
    rows = [brute_r_row(k, n, limit, jobs) for n in range(1, count + 1)]
    if which == "s":
        values = [row.total for row in rows]
    else:
        values = [row.finite_counts[0] for row in rows]
        if which == "t":
            values = list(accumulate(values))
    return CountSequence(tuple(values), which)


def _seeds(k: int, which: str) -> tuple[int, ...]:
    if k == 1 and which != "s":
        # the r0/t closed forms start at k = 2; for k = 1 the two seeds are
        # {1} (maximal, d = 0) and nothing maximal with max 2
        return (1, 0) if which == "r0" else (1, 1)
    return getattr(closed_form_initials(k, (which,)), which)


def _recurrence(k: int, which: str, count: int) -> CountSequence:
    seeds = CountSequence(_seeds(k, which), which)
    return extend_by_recurrence(seeds, schreier_char_poly(k), count)


def compute_sequence(k: int, which: str, count: int, engine: str = "dp",
                     limit: int = ENUMERATION_LIMIT, jobs: int = 1) -> CountSequence:
    _check_k(k)
    if which not in SEQUENCE_LABELS:
        raise SchreierError(f"unknown sequence {which!r}")
    if count < 1:
        raise SchreierError(f"count must be positive, got {count}")
    if engine == "dp":
        return _dp(k, which, count)
    if engine == "brute":
        return _brute(k, which, count, limit, jobs)
    if engine == "recurrence":
        return _recurrence(k, which, count)
    raise SchreierError(f"unknown engine {engine!r}")
