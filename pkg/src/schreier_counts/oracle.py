"""Exhaustive counters over all subsets of {1, ..., n}.

These are exponential in ``n`` and exist to check the polynomial-time
table construction.  Nothing here reads a DP table.
"""
from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator

from .sets import INFINITY, DValue, SchreierError, _blocks, _check_k, as_finite_set, is_k_schreier

#: Largest ``n`` the enumerators accept unless told otherwise.
ENUMERATION_LIMIT = 24


class EnumerationLimitError(SchreierError):
    pass


@dataclass(frozen=True)
class BruteRow:
    """Counts of the members of (kS)^n, bucketed by d-value."""

    k: int
    n: int
    finite_counts: dict[int, int] = field(default_factory=dict)
    infinite_count: int = 0

    @property
    def total(self) -> int:
        return sum(self.finite_counts.values()) + self.infinite_count

    def as_list(self) -> list[int]:
        """Finite counts as a list indexed by d = 0 .. n-1."""
        return [self.finite_counts[d] for d in range(self.n)]


def _check_n(n: int, limit: int) -> None:
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise SchreierError(f"n must be a positive integer, got {n!r}")
    if n > limit:
        raise EnumerationLimitError(
            f"enumeration bound exceeded: n={n} > limit {limit}")


def _subsets_with_max(n: int, lo: int = 0, hi: int | None = None) -> Iterator[tuple[int, ...]]:
    # Bit (n-1-i) of the mask marks element i, so element 1 is the most
    # significant bit; walking masks downward gives the sets in ascending
    # lexicographic order of their sorted elements.
    width = n - 1
    top = 1 << width
    if hi is None:
        hi = top
    for rank in range(lo, hi):
        mask = top - 1 - rank
        yield tuple(i for i in range(1, n) if mask >> (width - i) & 1) + (n,)


def enumerate_family(k: int, n: int, limit: int = ENUMERATION_LIMIT) -> Iterator[tuple[int, ...]]:
    """Yield every member of kS with maximum exactly ``n``.

    >>> list(enumerate_family(1, 3))
    [(1, 3), (2, 3), (3,)]
    """
    _check_k(k)
    _check_n(n, limit)
    for F in _subsets_with_max(n):
        if len(_blocks(F)) <= k:
            yield F


def brute_s(k: int, n: int, limit: int = ENUMERATION_LIMIT) -> int:
    return sum(1 for _ in enumerate_family(k, n, limit))


def _classify_range(k: int, n: int, lo: int, hi: int) -> tuple[dict[int, int], int]:
    finite = dict.fromkeys(range(n), 0)
    infinite = 0
    for F in _subsets_with_max(n, lo, hi):
        blocks = _blocks(F)
        m = len(blocks)
        if m > k:
            continue
        if m < k:
            infinite += 1
        else:
            last = blocks[-1]
            finite[last[0] - len(last)] += 1
    return finite, infinite


def brute_r_row(k: int, n: int, limit: int = ENUMERATION_LIMIT, jobs: int = 1) -> BruteRow:
    """Classify every member of (kS)^n by its d-value.

    With ``jobs > 1`` the subset space is cut into contiguous rank ranges
    counted in worker processes; partial counts are summed in range order,
    so the result does not depend on ``jobs``.
    """
    _check_k(k)
    _check_n(n, limit)
    total = 1 << (n - 1)
    if jobs <= 1 or total < 1 << 12:
        finite, infinite = _classify_range(k, n, 0, total)
        return BruteRow(k, n, finite, infinite)

    step = -(-total // jobs)
    bounds = [(lo, min(lo + step, total)) for lo in range(0, total, step)]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        parts = list(pool.map(_classify_range, [k] * len(bounds), [n] * len(bounds),
                              [b[0] for b in bounds], [b[1] for b in bounds]))
    finite = dict.fromkeys(range(n), 0)
    infinite = 0
    for part_finite, part_infinite in parts:
        for d, c in part_finite.items():
            finite[d] += c
        infinite += part_infinite
    return BruteRow(k, n, finite, infinite)


def brute_t(k: int, n: int, limit: int = ENUMERATION_LIMIT) -> int:
    return sum(brute_r_row(k, i, limit).finite_counts[0] for i in range(1, n + 1))


def brute_d_value(F: Iterable[int], k: int,
                  member: Callable[[tuple[int, ...], int], bool] | None = None) -> DValue:
    """Largest ``d`` such that ``F`` plus the next ``d`` integers stays in kS.

    Membership is probed directly for d = 0, 1, 2, ...  A finite d-value is
    at most ``max F - 1`` (the room left in the k-th block is below its
    minimum), so surviving the probe at ``d = max F + 1`` means the d-value
    is infinite.

    ``member`` defaults to :func:`is_k_schreier`; pass
    :func:`partition_search` for a check that shares no code with the
    greedy decomposition.
    """
    _check_k(k)
    F = as_finite_set(F)
    if member is None:
        member = is_k_schreier
    if not member(F, k):
        raise SchreierError("not a k-Schreier set")
    top = F[-1]
    for d in range(1, top + 2):
        if not member(F + tuple(range(top + 1, top + d + 1)), k):
            return d - 1
    return INFINITY


def partition_search(F: Iterable[int], k: int) -> bool:
    """Decide membership in kS by searching all partitions into Schreier sets.

    Elements are dealt out in increasing order, so the first element placed
    in a part is its minimum and a part can absorb ``min - 1`` more.  The
    search state is the multiset of remaining capacities of the open parts.
    Overlapping unions need no separate treatment: every nonempty subset of
    a Schreier set is Schreier, so overlaps can always be made disjoint.
    """
    _check_k(k)
    F = as_finite_set(F)
    states = {()}
    for x in F:
        nxt = set()
        for caps in states:
            for i, c in enumerate(caps):
                if c > 0 and (i == 0 or caps[i - 1] != c):
                    nxt.add(tuple(sorted(caps[:i] + (c - 1,) + caps[i + 1:])))
            if len(caps) < k:
                nxt.add(tuple(sorted(caps + (x - 1,))))
        if not nxt:
            return False
        states = nxt
    return True
