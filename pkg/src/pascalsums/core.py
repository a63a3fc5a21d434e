"""Exact binomial coefficients, Fibonacci numbers and powers of two.

Binomials use the extended zero convention: C(n, k) = 0 whenever k < 0,
k > n or n < 0.  In-triangle values come from an append-only row cache
built with the additive recurrence.
"""
from __future__ import annotations

import threading
from typing import NamedTuple, Sequence


class CellIndex(NamedTuple):
    """A cell (n, k) of the triangle; any integers are allowed."""

    n: int
    k: int

    @property
    def in_triangle(self) -> bool:
        return 0 <= self.k <= self.n


class TriangleCache:
    """Append-only cache of triangle rows.

    Published rows are tuples and never change.  ``rows`` is only ever
    appended to under ``_lock``, so readers may index any row below
    ``high_water`` without locking.
    """

    def __init__(self, presize: int = 0) -> None:
        self.rows: list[tuple[int, ...]] = [(1,)]
        self._lock = threading.Lock()
        if presize > 0:
            self.extend_to(presize)

    @property
    def high_water(self) -> int:
        return len(self.rows) - 1

    def extend_to(self, n: int) -> None:
        if n < len(self.rows):
            return
        with self._lock:
            rows = self.rows
            prev = rows[-1]
            for _ in range(len(rows), n + 1):
                cur = [1]
                cur.extend(a + b for a, b in zip(prev, prev[1:]))
                cur.append(1)
                prev = tuple(cur)
                rows.append(prev)

    def row(self, n: int) -> tuple[int, ...]:
        if n >= len(self.rows):
            self.extend_to(n)
        return self.rows[n]

    def binomial(self, n: int, k: int) -> int:
        if k < 0 or k > n:
            return 0
        rows = self.rows
        if n >= len(rows):
            self.extend_to(n)
            rows = self.rows
        return rows[n][k]


_cache = TriangleCache()


def default_cache() -> TriangleCache:
    return _cache


def presize_cache(n: int) -> None:
    """Materialize rows ``0..n`` of the shared cache ahead of time."""
    _cache.extend_to(n)


def binomial(n: int, k: int) -> int:
    """Return C(n, k), or 0 outside 0 <= k <= n."""
    return _cache.binomial(n, k)


def row(n: int) -> Sequence[int]:
    """Return ``[C(n, 0), ..., C(n, n)]``."""
    if n < 0:
        raise ValueError(f"row index must be non-negative, got {n}")
    return _cache.row(n)


def fibonacci(n: int) -> int:
    """Return u_n with u_0 = u_1 = 1 and u_{m+2} = u_{m+1} + u_m."""
    if n < 0:
        raise ValueError(f"fibonacci index must be non-negative, got {n}")
    a, b = 1, 1
    for _ in range(n):
        a, b = b, a + b
    return a


def pow2(n: int) -> int:
    if n < 0:
        raise ValueError(f"exponent must be non-negative, got {n}")
    return 1 << n
