"""Named cross-checks run by ``schreier-counts verify``.

Each check compares two independently computed quantities and reports the
first place they disagree.  A table may be injected in place of the DP
table; every table-derived quantity is then read from it.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import accumulate

from .oracle import ENUMERATION_LIMIT, BruteRow, brute_r_row
from .recurrence import (check_recurrence, first_nonzero_offset, initial_sums_from,
                         leading_coeff_check, schreier_char_poly)
from .tables import RTable, build_r_table, diagonal_from_column, r0_column, s_sequence, t_sequence


@dataclass(frozen=True)
class CheckResult:
    name: str
    status: str  # PASS, FAIL or SKIP
    detail: str

    @property
    def failed(self) -> bool:
        return self.status == "FAIL"

    def line(self) -> str:
        return f"{self.status} {self.name}: {self.detail}"


@dataclass
class VerifyContext:
    k: int
    max_n: int
    table: RTable | None = None
    limit: int = ENUMERATION_LIMIT
    _brute: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.table is None:
            self.table = build_r_table(self.k, self.max_n)
        elif self.table.N < self.max_n:
            raise ValueError(f"table has {self.table.N} rows, max_n is {self.max_n}")
        elif self.table.N > self.max_n:
            self.table = RTable(self.table.k, self.table.rows[:self.max_n])

    @property
    def brute_n(self) -> int:
        return min(self.max_n, self.limit)

    def brute_row(self, k: int, n: int) -> BruteRow:
        if (k, n) not in self._brute:
            self._brute[k, n] = brute_r_row(k, n, self.limit)
        return self._brute[k, n]

    @cached_property
    def r0(self) -> tuple[int, ...]:
        return r0_column(self.table).values

    @cached_property
    def t(self) -> tuple[int, ...]:
        return t_sequence(self.table).values

    @cached_property
    def s(self) -> tuple[int, ...]:
        return s_sequence(self.k, self.max_n, self.table).values


def _recurrence(ctx: VerifyContext, name: str, values: tuple[int, ...]) -> CheckResult:
    p = schreier_char_poly(ctx.k)
    if len(values) < p.degree + 1:
        return CheckResult(name, "SKIP", f"need max-n >= {p.degree + 1} for a degree-{p.degree} recurrence")
    offset = first_nonzero_offset(check_recurrence(values, p))
    if offset is None:
        return CheckResult(name, "PASS", f"p_{ctx.k} annihilates n=1..{len(values)}")
    return CheckResult(name, "FAIL", f"first nonzero residual at offset n={offset}")


def check_recurrence_s(ctx):
    return _recurrence(ctx, "recurrence-s", ctx.s)


def check_recurrence_r0(ctx):
    return _recurrence(ctx, "recurrence-r0", ctx.r0)


def check_recurrence_t(ctx):
    return _recurrence(ctx, "recurrence-t", ctx.t)


def check_oracle(ctx):
    """Every finite cell and every s-term against exhaustive enumeration."""
    name = "oracle"
    for n in range(1, ctx.brute_n + 1):
        row = ctx.brute_row(ctx.k, n)
        for d in range(n):
            got, want = ctx.table.cell(n, d), row.finite_counts[d]
            if got != want:
                return CheckResult(name, "FAIL", f"cell n={n}, d={d}: table={got}, brute={want}")
        if ctx.s[n - 1] != row.total:
            return CheckResult(name, "FAIL", f"s at n={n}: table={ctx.s[n - 1]}, brute={row.total}")
    return CheckResult(name, "PASS", f"all cells and s-terms agree for n<={ctx.brute_n}")


def check_pascal(ctx):
    name = "pascal"
    for n in range(2, ctx.max_n + 1):
        if ctx.table.cell(n, n - 2) != 0:
            return CheckResult(name, "FAIL", f"second diagonal nonzero at cell n={n}, d={n - 2}")
        for d in range(n - 2):
            want = ctx.table.cell(n - 1, d) + ctx.table.cell(n - 1, d + 1)
            if ctx.table.cell(n, d) != want:
                return CheckResult(name, "FAIL", f"Pascal rule broken at cell n={n}, d={d}")
    return CheckResult(name, "PASS", f"Pascal rule and zero second diagonal for n<={ctx.max_n}")


def check_initial_sums(ctx):
    name = "initial-sums"
    need = 2**ctx.k + 1
    if ctx.max_n < need:
        return CheckResult(name, "SKIP", f"need max-n >= {need}")
    sums = initial_sums_from(ctx.k, ctx.r0, ctx.t, ctx.s)
    for i, v in enumerate(sums, start=1):
        if v:
            return CheckResult(name, "FAIL", f"sum {i} equals {v}")
    return CheckResult(name, "PASS", "all four initial sums vanish")


def check_leading_coeffs(ctx):
    name = "leading-coeffs"
    p = schreier_char_poly(ctx.k)
    if p.degree != 2**ctx.k or not p.is_monic():
        return CheckResult(name, "FAIL", f"p_{ctx.k} is not monic of degree {2**ctx.k}")
    if p(2) != 1:
        return CheckResult(name, "FAIL", f"p_{ctx.k}(2) = {p(2)}")
    if ctx.k >= 2 and not leading_coeff_check(ctx.k):
        return CheckResult(name, "FAIL", f"top three coefficients of p_{ctx.k} are wrong")
    return CheckResult(name, "PASS", f"p_{ctx.k} monic of degree {p.degree}, p_{ctx.k}(2) = 1")


def check_binomial_diagonal(ctx):
    name = "binomial-diagonal"
    last = (ctx.max_n + 1) // 2
    for n in range(1, last + 1):
        got = diagonal_from_column(ctx.r0, n)
        if got != ctx.table.cell(n, n - 1):
            return CheckResult(name, "FAIL", f"main diagonal mismatch at n={n}: "
                                             f"from column={got}, cell={ctx.table.cell(n, n - 1)}")
    return CheckResult(name, "PASS", f"main diagonal recovered from first column for n<={last}")


def check_move_tables(ctx):
    """Main diagonal of the k-table against brute-force t of the (k-1)-table."""
    name = "move-tables"
    if ctx.k == 1:
        for n in range(1, ctx.max_n + 1):
            if ctx.table.cell(n, n - 1) != 1:
                return CheckResult(name, "FAIL", f"base diagonal is not 1 at n={n}")
        return CheckResult(name, "PASS", f"k=1 main diagonal is all ones for n<={ctx.max_n}")
    if ctx.table.cell(1, 0) != 0:
        return CheckResult(name, "FAIL", "cell n=1, d=0 must be 0 for k>=2")
    last = min(ctx.max_n - 1, ctx.limit)
    t_lower = list(accumulate(ctx.brute_row(ctx.k - 1, n).finite_counts[0] for n in range(1, last + 1)))
    for n in range(1, last + 1):
        if ctx.table.cell(n + 1, n) != t_lower[n - 1]:
            return CheckResult(name, "FAIL", f"cell n={n + 1}, d={n}: table={ctx.table.cell(n + 1, n)}, "
                                             f"brute t_{ctx.k - 1}={t_lower[n - 1]}")
    return CheckResult(name, "PASS", f"main diagonal equals brute t_{ctx.k - 1} for n<={last}")


def check_s_recursion(ctx):
    name = "s-recursion"
    for n in range(2, ctx.brute_n + 1):
        lhs = ctx.brute_row(ctx.k, n).total
        rhs = 2 * ctx.brute_row(ctx.k, n - 1).total - ctx.r0[n - 2]
        if lhs != rhs:
            return CheckResult(name, "FAIL", f"s=2s-r0 fails at n={n}: brute s={lhs}, 2s-r0={rhs}")
    return CheckResult(name, "PASS", f"brute s obeys s(n) = 2s(n-1) - r0(n-1) for n<={ctx.brute_n}")


CHECKS = {
    "recurrence-s": check_recurrence_s,
    "recurrence-r0": check_recurrence_r0,
    "recurrence-t": check_recurrence_t,
    "oracle": check_oracle,
    "pascal": check_pascal,
    "initial-sums": check_initial_sums,
    "leading-coeffs": check_leading_coeffs,
    "binomial-diagonal": check_binomial_diagonal,
    "move-tables": check_move_tables,
    "s-recursion": check_s_recursion,
}


def run_checks(k: int, max_n: int, checks=None, table: RTable | None = None,
               limit: int = ENUMERATION_LIMIT) -> list[CheckResult]:
    """Run the named checks (all of them by default) in a fixed order."""
    names = list(CHECKS) if checks is None else list(checks)
    unknown = [c for c in names if c not in CHECKS]
    if unknown:
        raise ValueError(f"unknown checks: {', '.join(unknown)}")
    ctx = VerifyContext(k, max_n, table, limit)
    return [CHECKS[name](ctx) for name in names]
