"""
Sums along a vertical line
==========================

Cells (n, k), (n-2, k-1), (n-4, k-2), ... sit on one vertical of the
centered triangle.  Their sum equals the alternating sum down the next
shallow diagonal, C(n+1,k+1) - C(n,k+2) + ..., up to a correction of
-1, 0 or +1 that depends only on d = n - 2k.
"""
from pascalsums import (
    alternating_diagonal_sum,
    correction_term,
    theorem_rhs,
    vertical_partial_sum,
)
from pascalsums.sums import CorrectionClass

print(f"{'n':>3} {'k':>3} {'d':>3} {'vertical':>9} {'alternating':>12} {'eps':>4}")
for n, k in [(6, 2), (6, 1), (5, 2), (4, 2), (9, 1), (12, 3)]:
    d = n - 2 * k
    print(f"{n:>3} {k:>3} {d:>3} {vertical_partial_sum(n, k):>9} "
          f"{alternating_diagonal_sum(n, k):>12} {correction_term(d):>4}")

# The correction is six-periodic once d > 0.
print([correction_term(d) for d in range(-2, 14)])
print(CorrectionClass.of(10))

# Exhaustive check over a large triangle.
mismatches = [
    (n, k) for n in range(151) for k in range(n + 1)
    if vertical_partial_sum(n, k) != theorem_rhs(n, k)
]
print("mismatches up to n=150:", mismatches)
