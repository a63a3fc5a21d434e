"""
Writing identities as text
==========================

Lattice sums can be written in a small language: ``C(a, b)``, ``fib``,
``pow2``, ``eps``, ``sum j [ ... ]`` and ``(-1)^j``.  Index arguments are
affine in n, k and the summation indices.  Sums run from j = 0 until the
terms vanish.
"""
from pascalsums.dsl import (
    DslError,
    NonTerminatingSum,
    evaluate,
    parse_expression,
    parse_identity,
    pretty_print,
    tokenize,
)
from pascalsums.identities import BUILTIN_IDENTITIES
from pascalsums.verifier import check_identity

vertical = parse_expression("sum j [ C(n-2*j, k-j) ]")
print(evaluate(vertical, {"n": 6, "k": 2}))

theorem = parse_identity(BUILTIN_IDENTITIES["theorem"])
print(pretty_print(theorem))
print(len(tokenize(BUILTIN_IDENTITIES["theorem"])), "tokens")

# Range verification reports every counterexample, not just the first one.
print(check_identity(theorem, 60).summary())
print(check_identity("sum j [ C(n-2*j, k-j) ] == sum j [ (-1)^j * C(n+1-j, k+1+j) ]", 12).summary())

# Sums whose terms never vanish are rejected.
try:
    evaluate(parse_expression("sum j [ pow2(j) ]"), {"n": 3, "k": 0})
except NonTerminatingSum as exc:
    print(exc)

# Only n and k are free.
try:
    parse_expression("sum j [ C(m, j) ]")
except DslError as exc:
    print(exc)
