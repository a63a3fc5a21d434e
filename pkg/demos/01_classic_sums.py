"""
Rows, diagonals and the classic sums
====================================

The triangle is built row by row with exact integers.  Three classic
sums are checked here: whole rows, the hockey stick, and the shallow
diagonals that give the Fibonacci numbers.
"""
from pascalsums import (
    binomial,
    fibonacci,
    hockey_stick_sum,
    horizontal_sum,
    pow2,
    row,
    shallow_diagonal_sum,
)

for n in range(6):
    print(" ".join(str(v) for v in row(n)).center(40))

# Row sums are powers of two, even far down the triangle.
print(horizontal_sum(500) == pow2(500))

# Hockey stick: C(2,2) + C(3,2) + C(4,2) = C(5,3).
print(hockey_stick_sum(4, 2), binomial(5, 3))

# Shallow diagonals C(n,0) + C(n-1,1) + ... give u_n with u_0 = u_1 = 1.
print([shallow_diagonal_sum(n) for n in range(10)])
print([fibonacci(n) for n in range(10)])

# Off the triangle every coefficient is zero, which keeps open-ended sums finite.
print(binomial(4, 7), binomial(-1, 0), binomial(3, -1))
