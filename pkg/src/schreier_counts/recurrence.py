"""The polynomial family p_k and exact linear-recurrence checks."""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb

from .polynomial import IntPolynomial
from .sets import SchreierError
from .tables import CountSequence, SequenceLike, _values, build_r_table, r0_column, s_sequence, t_sequence

X_TIMES_X_MINUS_1 = IntPolynomial((0, -1, 1))


def compose_x_xminus1(p: IntPolynomial) -> IntPolynomial:
    """The polynomial x -> p(x(x - 1))."""
    return p.compose(X_TIMES_X_MINUS_1)


@lru_cache(maxsize=None)
def schreier_char_poly(k: int) -> IntPolynomial:
    """p_0 = x - 1 and p_k(x) = p_{k-1}(x(x - 1)); monic of degree 2**k."""
    if isinstance(k, bool) or not isinstance(k, int) or k < 0:
        raise SchreierError(f"k must be a nonnegative integer, got {k!r}")
    if k == 0:
        return IntPolynomial((-1, 1))
    return compose_x_xminus1(schreier_char_poly(k - 1))


def eval_int(p: IntPolynomial, x: int) -> int:
    return p(x)


def check_recurrence(seq: SequenceLike, p: IntPolynomial) -> list[int]:
    """Residuals sum_i p[i] * a(n + i) for every offset n = 1, 2, ...

    The sequence obeys the recurrence with characteristic polynomial ``p``
    iff every residual is zero.  Entry ``j`` of the result belongs to the
    1-based offset ``j + 1``.
    """
    a = _values(seq)
    deg = p.degree
    if deg < 0:
        raise SchreierError("the zero polynomial defines no recurrence")
    if len(a) < deg + 1:
        raise SchreierError(f"sequence too short: need {deg + 1} terms, have {len(a)}")
    c = p.coeffs
    return [sum(c[i] * a[n + i] for i in range(deg + 1) if c[i]) for n in range(len(a) - deg)]


def first_nonzero_offset(residuals: list[int]) -> int | None:
    """1-based offset of the first nonzero residual, or None."""
    for j, r in enumerate(residuals):
        if r:
            return j + 1
    return None


def extend_by_recurrence(initial: SequenceLike, p: IntPolynomial, N: int) -> CountSequence:
    """Continue ``initial`` to N terms using the recurrence of monic ``p``."""
    if not p.is_monic():
        raise SchreierError("requires monic polynomial")
    a = list(_values(initial))
    deg = p.degree
    if len(a) < deg:
        raise SchreierError(f"need {deg} initial terms, have {len(a)}")
    c = p.coeffs
    while len(a) < N:
        base = len(a) - deg
        a.append(-sum(c[i] * a[base + i] for i in range(deg) if c[i]))
    label = initial.label if isinstance(initial, CountSequence) else "s"
    return CountSequence(tuple(a[:N]), label)


def leading_coeff_check(k: int) -> bool:
    """Check the top three coefficients of p_k against their closed forms."""
    if k < 2:
        raise SchreierError("leading coefficient formulas need k >= 2")
    p = schreier_char_poly(k)
    top = 2**k
    return (p.coefficient(top) == 1
            and p.coefficient(top - 1) == -(2 ** (k - 1))
            and p.coefficient(top - 2) == comb(2 ** (k - 1), 2) - 2 ** (k - 2))


@dataclass(frozen=True)
class InitialValues:
    """Closed-form initial terms for n = 1 .. 2**k + 1 (None where undefined)."""

    k: int
    r0: tuple[int, ...] | None
    t: tuple[int, ...] | None
    s: tuple[int, ...] | None


def _closed_form_r0(k: int) -> tuple[int, ...]:
    top = 2**k
    return (0,) * (top - 2) + (1, 2 ** (k - 1) - 1, comb(2 ** (k - 1), 2) + 2 ** (k - 2))


def _closed_form_t(k: int) -> tuple[int, ...]:
    top = 2**k
    return (0,) * (top - 2) + (1, 2 ** (k - 1), 2 ** (k - 1) + comb(2 ** (k - 1), 2) + 2 ** (k - 2))


def _closed_form_s(k: int) -> tuple[int, ...]:
    top = 2**k
    return tuple(2 ** (n - 1) for n in range(1, top)) + (2 ** (top - 1) - 1, 2**top - (2 ** (k - 1) + 1))


def closed_form_initials(k: int, families: tuple[str, ...] = ("r0", "t", "s")) -> InitialValues:
    """Closed-form values of the requested sequences for n <= 2**k + 1.

    The r0 and t formulas hold for k >= 2, the s formulas for k >= 1;
    requesting a family outside its range raises.
    """
    if isinstance(k, bool) or not isinstance(k, int) or k < 1:
        raise SchreierError(f"k must be a positive integer, got {k!r}")
    unknown = set(families) - {"r0", "t", "s"}
    if unknown:
        raise SchreierError(f"unknown families {sorted(unknown)}")
    if k < 2 and ({"r0", "t"} & set(families)):
        raise SchreierError("closed forms for r0 and t need k >= 2")
    return InitialValues(
        k,
        _closed_form_r0(k) if "r0" in families else None,
        _closed_form_t(k) if "t" in families else None,
        _closed_form_s(k) if "s" in families else None,
    )


def initial_sums(k: int, source: str = "table") -> tuple[int, int, int, int]:
    """The four sums that must vanish for the recurrences to start correctly.

    In order: sum d_{i-1} r0(i) for i = 1..2^k+1; sum d_i t(i+1) for
    i = 0..2^k; sum d_i t(i) for i = 1..2^k; sum d_i s(i+1) for i = 0..2^k,
    where d_i are the coefficients of p_k.  ``source`` picks where the
    sequence values come from: ``"table"`` (DP) or ``"closed_form"``.
    """
    top = 2**k
    if source == "table":
        table = build_r_table(k, top + 1)
        r0 = r0_column(table).values
        t = t_sequence(table).values
        s = s_sequence(k, top + 1, table).values
    elif source == "closed_form":
        iv = closed_form_initials(k)
        r0, t, s = iv.r0, iv.t, iv.s
    else:
        raise SchreierError(f"unknown source {source!r}")
    return initial_sums_from(k, r0, t, s)


def initial_sums_from(k: int, r0: SequenceLike, t: SequenceLike, s: SequenceLike) -> tuple[int, int, int, int]:
    """The four initial sums of :func:`initial_sums` over given sequences."""
    top = 2**k
    r0, t, s = _values(r0), _values(t), _values(s)
    if min(len(r0), len(t), len(s)) < top + 1:
        raise SchreierError(f"initial sums need {top + 1} terms of each sequence")
    d = schreier_char_poly(k).coeffs
    return (
        sum(d[i - 1] * r0[i - 1] for i in range(1, top + 2)),
        sum(d[i] * t[i] for i in range(top + 1)),
        sum(d[i] * t[i - 1] for i in range(1, top + 1)),
        sum(d[i] * s[i] for i in range(top + 1)),
    )


def initial_sums_check(k: int, source: str = "table") -> bool:
    return all(v == 0 for v in initial_sums(k, source))
