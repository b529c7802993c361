"""Ordered sums of positive integers (k-compositions of n).

A k-composition of n is encoded by choosing k-1 separator slots out of the
n-1 slots between n unit boxes; parts are the distances between separators.
Generation therefore reduces to itertools.combinations, whose lexicographic
separator order coincides with lexicographic order on the part tuples.
"""

from __future__ import annotations

from itertools import combinations
from math import comb
from typing import Iterator

Composition = tuple[int, ...]


def count_compositions(n: int, k: int) -> int:
    """Number of k-compositions of n: C(n-1, k-1)."""
    _validate(n, k)
    return comb(n - 1, k - 1)


def compositions(n: int, k: int) -> Iterator[Composition]:
    """All k-compositions of n in lexicographic order of their parts."""
    _validate(n, k)
    return _gen(n, k)


def _gen(n: int, k: int) -> Iterator[Composition]:
    for seps in combinations(range(1, n), k - 1):
        previous = 0
        parts = []
        for cut in seps:
            parts.append(cut - previous)
            previous = cut
        parts.append(n - previous)
        yield tuple(parts)


def _validate(n: int, k: int) -> None:
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    if not 1 <= k <= n:
        raise ValueError(f"k must satisfy 1 <= k <= n, got k={k}, n={n}")
