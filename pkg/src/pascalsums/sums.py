"""Direct evaluators for the lattice sums over the triangle.

All sums read binomials from the shared row cache.  Open-ended sums are
truncated where the extended zero convention makes every later term vanish.
"""
from __future__ import annotations

import enum
from typing import NamedTuple

from .core import binomial, default_cache

# correction by (n - 2k) mod 6, used only when n - 2k > 0
RESIDUE_CORRECTION: tuple[int, ...] = (0, -1, -1, 0, 1, 1)


class CorrectionKind(enum.Enum):
    NONPOSITIVE = "nonpositive"
    ZERO_MOD = "zero_mod"
    MINUS_ONE = "minus_one"
    PLUS_ONE = "plus_one"


class CorrectionClass(NamedTuple):
    d: int
    kind: CorrectionKind

    @classmethod
    def of(cls, d: int) -> "CorrectionClass":
        if d <= 0:
            return cls(d, CorrectionKind.NONPOSITIVE)
        r = d % 6
        if r in (0, 3):
            return cls(d, CorrectionKind.ZERO_MOD)
        if r in (1, 2):
            return cls(d, CorrectionKind.MINUS_ONE)
        return cls(d, CorrectionKind.PLUS_ONE)


def _require_cell(n: int, k: int) -> None:
    if not 0 <= k <= n:
        raise ValueError(f"cell ({n}, {k}) is outside the triangle")


def horizontal_sum(n: int) -> int:
    """Sum of row ``n``."""
    if n < 0:
        raise ValueError(f"row index must be non-negative, got {n}")
    return sum(default_cache().row(n))


def hockey_stick_sum(n: int, k: int) -> int:
    """Sum of C(m, k) for m = k..n."""
    _require_cell(n, k)
    rows = default_cache()
    rows.extend_to(n)
    return sum(rows.rows[m][k] for m in range(k, n + 1))


def shallow_diagonal_sum(n: int) -> int:
    """Sum of C(n - j, j) over j >= 0 (the slope-1/3 diagonal)."""
    if n < 0:
        raise ValueError(f"diagonal index must be non-negative, got {n}")
    return sum(binomial(n - j, j) for j in range(n // 2 + 1))


def vertical_partial_sum(n: int, k: int) -> int:
    """Sum of C(n - 2j, k - j) over j >= 0.

    Terms vanish past j = min(k, n - k).
    """
    _require_cell(n, k)
    return sum(binomial(n - 2 * j, k - j) for j in range(min(k, n - k) + 1))


def alternating_diagonal_sum(n: int, k: int) -> int:
    """Sum of (-1)^j C(n + 1 - j, k + 1 + j) over j >= 0.

    The first term is C(n + 1, k + 1); terms vanish for j > (n - k) / 2.
    """
    _require_cell(n, k)
    total = 0
    for j in range((n - k) // 2 + 1):
        term = binomial(n + 1 - j, k + 1 + j)
        total += -term if j & 1 else term
    return total


def correction_term(d: int) -> int:
    """The {-1, 0, +1} adjustment for the vertical ``d = n - 2k``."""
    if d <= 0:
        return 0
    return RESIDUE_CORRECTION[d % 6]


def theorem_rhs(n: int, k: int) -> int:
    return alternating_diagonal_sum(n, k) + correction_term(n - 2 * k)


__all__ = [
    "CorrectionClass",
    "CorrectionKind",
    "RESIDUE_CORRECTION",
    "alternating_diagonal_sum",
    "correction_term",
    "hockey_stick_sum",
    "horizontal_sum",
    "shallow_diagonal_sum",
    "theorem_rhs",
    "vertical_partial_sum",
]
