"""The paper identities written in the lattice-sum language."""
from __future__ import annotations

from typing import Callable

from . import sums

BUILTIN_IDENTITIES: dict[str, str] = {
    # row sum is a power of two
    "eq1": "sum j [ C(n, j) ] == pow2(n)",
    # hockey stick: C(k,k) + ... + C(n,k) == C(n+1,k+1)
    "eq2": "sum j [ C(n-j, k) ] == C(n+1, k+1)",
    # slope-1/3 diagonal gives u_n
    "eq3": "sum j [ C(n-j, j) ] == fib(n)",
    # vertical partial sum == alternating diagonal sum + six-periodic correction
    "theorem": "sum j [ C(n-2*j, k-j) ] == sum j [ (-1)^j * C(n+1-j, k+1+j) ] + eps(n-2*k)",
}

# expression text paired with the direct evaluator it must agree with
PAPER_EXPRESSIONS: dict[str, tuple[str, Callable[[int, int], int]]] = {
    "horizontal": ("sum j [ C(n, j) ]", lambda n, k: sums.horizontal_sum(n)),
    "hockey_stick": ("sum j [ C(n-j, k) ]", sums.hockey_stick_sum),
    "shallow_diagonal": ("sum j [ C(n-j, j) ]", lambda n, k: sums.shallow_diagonal_sum(n)),
    "vertical": ("sum j [ C(n-2*j, k-j) ]", sums.vertical_partial_sum),
    "theorem_rhs": ("sum j [ (-1)^j * C(n+1-j, k+1+j) ] + eps(n-2*k)", sums.theorem_rhs),
}
