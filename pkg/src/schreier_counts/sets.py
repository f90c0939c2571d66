"""Finite-set primitives: Schreier membership, greedy decomposition, d-values.

A finite set is passed around as a strictly increasing tuple of positive
integers.  Every operation here rejects the empty set.
"""
from __future__ import annotations

import math
from typing import Iterable, Sequence, Union

#: Marker for an unbounded d-value.  ``math.inf`` compares above every
#: integer and never equals one, so it cannot collide with a finite d.
INFINITY = math.inf

#: Largest element accepted by :func:`as_finite_set` unless told otherwise.
MAX_ELEMENT = 10**6

DValue = Union[int, float]


class SchreierError(ValueError):
    """Raised for inputs outside an operation's domain."""


def as_finite_set(elements: Iterable[int], limit: int = MAX_ELEMENT) -> tuple[int, ...]:
    """Validate ``elements`` and return them as a strictly increasing tuple.

    Python ``set``/``frozenset`` inputs are sorted first; any other iterable
    must already be strictly increasing.
    """
    if isinstance(elements, (set, frozenset)):
        elements = sorted(elements)
    items = tuple(elements)
    if not items:
        raise SchreierError("empty set")
    prev = 0
    for x in items:
        if isinstance(x, bool) or not isinstance(x, int):
            raise SchreierError(f"set elements must be integers, got {x!r}")
        if x < 1:
            raise SchreierError(f"set elements must be positive, got {x}")
        if x <= prev:
            raise SchreierError("set elements must be strictly increasing")
        if x > limit:
            raise SchreierError(f"element {x} exceeds the element limit {limit}")
        prev = x
    return items


def is_schreier(F: Iterable[int]) -> bool:
    F = as_finite_set(F)
    return len(F) <= F[0]


def is_maximal_schreier(F: Iterable[int]) -> bool:
    F = as_finite_set(F)
    return len(F) == F[0]


def _blocks(F: Sequence[int]) -> list[tuple[int, ...]]:
    blocks = []
    i = 0
    while i < len(F):
        # a maximal initial segment has exactly min-many elements
        size = F[i]
        if len(F) - i < size:
            blocks.append(tuple(F[i:]))
            break
        blocks.append(tuple(F[i:i + size]))
        i += size
    return blocks


def greedy_decompose(F: Iterable[int]) -> list[tuple[int, ...]]:
    """Split ``F`` into successive Schreier blocks, greedily.

    Each block is the longest maximal Schreier initial segment of what is
    left; when no such segment exists the whole remainder becomes the last
    block.  Only nonempty blocks are returned.

    >>> greedy_decompose([2, 3, 4, 5])
    [(2, 3), (4, 5)]
    """
    return _blocks(as_finite_set(F))


def is_k_schreier(F: Iterable[int], k: int) -> bool:
    """True iff ``F`` is a union of at most ``k`` Schreier sets."""
    _check_k(k)
    return len(greedy_decompose(F)) <= k


def d_value(F: Iterable[int], k: int) -> DValue:
    """Number of elements that can still be appended above ``max F`` in kS.

    Returns :data:`INFINITY` when the greedy decomposition uses fewer than
    ``k`` blocks.
    """
    _check_k(k)
    blocks = greedy_decompose(F)
    if len(blocks) > k:
        raise SchreierError("not a k-Schreier set")
    if len(blocks) < k:
        return INFINITY
    last = blocks[-1]
    return last[0] - len(last)


def _check_k(k: int) -> None:
    if isinstance(k, bool) or not isinstance(k, int) or k < 1:
        raise SchreierError(f"k must be a positive integer, got {k!r}")
