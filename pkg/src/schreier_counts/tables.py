"""Polynomial-time construction of the r-tables and the s, r0, t sequences.

Rows are indexed by ``n`` starting at 1, columns by ``d`` starting at 0;
row ``n`` holds the counts for d = 0 .. n-1.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import accumulate
from math import comb
from typing import Iterable, Iterator, Sequence, Union

from .sets import SchreierError, _check_k

SEQUENCE_LABELS = ("s", "r0", "t")


@dataclass(frozen=True)
class CountSequence:
    """A 1-indexed integer sequence with a label from ``SEQUENCE_LABELS``."""

    values: tuple[int, ...]
    label: str = "s"

    def __post_init__(self):
        if not self.values:
            raise SchreierError("a count sequence needs at least one term")
        if self.label not in SEQUENCE_LABELS:
            raise SchreierError(f"unknown sequence label {self.label!r}")

    def term(self, n: int) -> int:
        if n < 1:
            raise IndexError(f"sequence index starts at 1, got {n}")
        return self.values[n - 1]

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self) -> Iterator[int]:
        return iter(self.values)


SequenceLike = Union[CountSequence, Sequence[int]]


def _values(seq: SequenceLike) -> tuple[int, ...]:
    return seq.values if isinstance(seq, CountSequence) else tuple(seq)


@dataclass(frozen=True)
class RTable:
    k: int
    rows: tuple[tuple[int, ...], ...]

    @property
    def N(self) -> int:
        return len(self.rows)

    def cell(self, n: int, d: int) -> int:
        if not 1 <= n <= self.N or not 0 <= d < n:
            raise IndexError(f"no cell at n={n}, d={d} in a table with {self.N} rows")
        return self.rows[n - 1][d]

    def main_diagonal(self) -> tuple[int, ...]:
        return tuple(row[-1] for row in self.rows)

    def second_diagonal(self) -> tuple[int, ...]:
        return tuple(row[-2] for row in self.rows[1:])

    def with_cell(self, n: int, d: int, value: int) -> "RTable":
        """Copy of this table with one cell replaced."""
        self.cell(n, d)
        rows = list(self.rows)
        row = list(rows[n - 1])
        row[d] = value
        rows[n - 1] = tuple(row)
        return RTable(self.k, tuple(rows))


def pascal_fill(main_diag: SequenceLike, second_diag: SequenceLike, N: int,
                k: int = 1) -> RTable:
    """Fill an N-row Pascal-like triangle from its two main diagonals.

    ``main_diag[i-1]`` becomes cell(i, i-1) and ``second_diag[i-1]`` becomes
    cell(i+1, i-1).  Every other cell is the sum of the cell above and the
    cell above-right.
    """
    main = _values(main_diag)
    second = _values(second_diag)
    if len(main) < N or len(second) < N - 1:
        raise SchreierError(f"diagonals too short for {N} rows")
    rows: list[tuple[int, ...]] = []
    for n in range(1, N + 1):
        if n == 1:
            row = [main[0]]
        elif n == 2:
            row = [second[0], main[1]]
        else:
            prev = rows[-1]
            row = [prev[d] + prev[d + 1] for d in range(n - 2)]
            row.append(second[n - 2])
            row.append(main[n - 1])
        rows.append(tuple(row))
    return RTable(k, tuple(rows))


@lru_cache(maxsize=64)
def _build(k: int, N: int) -> RTable:
    zeros = (0,) * N
    if k == 1:
        # only {n} has d = n - 1
        return pascal_fill((1,) * N, zeros, N, k=1)
    # cell(n+1, n) counts maximal (k-1)-Schreier sets with max <= n - 1,
    # i.e. the t-sequence of the lower table
    lower_t = t_sequence(_build(k - 1, N)).values
    main = (0,) + lower_t[:N - 1]
    return pascal_fill(main, zeros, N, k=k)


def build_r_table(k: int, N: int) -> RTable:
    """The table of r^d_{k,n} for n = 1 .. N, built bottom-up from k = 1."""
    _check_k(k)
    if isinstance(N, bool) or not isinstance(N, int) or N < 1:
        raise SchreierError(f"N must be a positive integer, got {N!r}")
    return _build(k, N)


def r0_column(table: RTable) -> CountSequence:
    return CountSequence(tuple(row[0] for row in table.rows), "r0")


def t_sequence(table: RTable) -> CountSequence:
    return CountSequence(tuple(accumulate(r0_column(table).values)), "t")


def s_sequence(k: int, N: int, table: RTable | None = None) -> CountSequence:
    """s_{k,1..N} via s(n) = 2 s(n-1) - r0(n-1), starting from s(1) = 1.

    ``table`` overrides the DP table (it must have at least N - 1 rows).
    """
    if table is None:
        table = build_r_table(k, N)
    if table.N < N - 1:
        raise SchreierError(f"table has {table.N} rows, need {N - 1}")
    s = [1]
    for n in range(2, N + 1):
        s.append(2 * s[-1] - table.rows[n - 2][0])
    return CountSequence(tuple(s), "s")


def diagonal_from_column(column: SequenceLike, n: int) -> int:
    """Recover cell(n, n-1) of a Pascal-like table from its first column."""
    col = _values(column)
    if n < 1:
        raise SchreierError(f"n must be positive, got {n}")
    if len(col) < 2 * n - 1:
        raise SchreierError(f"column too short: need {2 * n - 1} terms, have {len(col)}")
    return sum((-1) ** (n - 1 - j) * comb(n - 1, j) * col[n + j - 1] for j in range(n))


def table_from_rows(k: int, rows: Iterable[Iterable[int]]) -> RTable:
    """Validate triangular rows (row n has n entries) and wrap them."""
    out = []
    for n, row in enumerate(rows, start=1):
        row = tuple(row)
        if len(row) != n or not all(isinstance(x, int) and not isinstance(x, bool) for x in row):
            raise SchreierError(f"row {n} must hold {n} integers")
        out.append(row)
    if not out:
        raise SchreierError("table has no rows")
    _check_k(k)
    return RTable(k, tuple(out))
