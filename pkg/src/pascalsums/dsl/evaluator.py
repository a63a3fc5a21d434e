"""Exact evaluation of lattice-sum expressions.

Two routes with identical semantics:

* :func:`evaluate` walks the tree.  A ``sum j [...]`` adds its body for
  ``j = 0 .. J-1`` with the safe bound ``J = max(n,0) + max(k,0) + 2`` and
  raises :class:`NonTerminatingSum` unless the term at ``j = J`` is zero.
* :func:`compile_expr` turns the tree into a Python function of ``(n, k)``.
  Each summation only visits the indices where its body can be nonzero,
  derived from the affine arguments of its binomials and built-ins.

Inside the language every built-in follows the zero convention: ``C`` is 0
off the triangle, and ``fib``/``pow2`` are 0 at negative arguments.
"""
from __future__ import annotations

import functools
from typing import Callable, Mapping, Sequence

from .. import sums
from ..core import binomial, default_cache, fibonacci
from . import nodes as ast
from .errors import NonTerminatingSum, UnboundVariable

CorrectionTable = Sequence[int]


def safe_bound(n: int, k: int) -> int:
    return max(n, 0) + max(k, 0) + 2


def make_correction(table: CorrectionTable | None) -> Callable[[int], int]:
    """The ``eps`` built-in, optionally with a replacement residue table."""
    if table is None:
        return sums.correction_term
    table = tuple(table)
    if len(table) != 6:
        raise ValueError("a correction table has exactly six entries")
    return lambda d: table[d % 6] if d > 0 else 0


def _fib(m: int) -> int:
    return fibonacci(m) if m >= 0 else 0


def _pow2(m: int) -> int:
    return 1 << m if m >= 0 else 0


class _Interpreter:
    def __init__(self, n: int, k: int, correction: Callable[[int], int]) -> None:
        self.bound = safe_bound(n, k)
        self.correction = correction

    def run(self, node: ast.SumExpr, env: dict[str, int]) -> int:
        if isinstance(node, ast.IntegerLiteral):
            return node.value
        if isinstance(node, ast.Binomial):
            return binomial(node.upper.evaluate(env), node.lower.evaluate(env))
        if isinstance(node, ast.Fib):
            return _fib(node.arg.evaluate(env))
        if isinstance(node, ast.Pow2):
            return _pow2(node.arg.evaluate(env))
        if isinstance(node, ast.Eps):
            return self.correction(node.arg.evaluate(env))
        if isinstance(node, ast.AlternatingSign):
            return -1 if env[node.index] & 1 else 1
        if isinstance(node, ast.Add):
            return self.run(node.left, env) + self.run(node.right, env)
        if isinstance(node, ast.Sub):
            return self.run(node.left, env) - self.run(node.right, env)
        if isinstance(node, ast.Mul):
            return self.run(node.left, env) * self.run(node.right, env)
        if isinstance(node, ast.Negate):
            return -self.run(node.child, env)
        if isinstance(node, ast.Sum):
            inner = dict(env)
            total = 0
            for j in range(self.bound):
                inner[node.index] = j
                total += self.run(node.body, inner)
            inner[node.index] = self.bound
            if self.run(node.body, inner) != 0:
                raise NonTerminatingSum(node.index, self.bound)
            return total
        raise TypeError(f"not an AST node: {node!r}")


def _check_bindings(node: ast.SumExpr, bindings: Mapping[str, int]) -> tuple[int, int]:
    for name in ast.free_parameters(node):
        if name not in bindings:
            raise UnboundVariable(name)
    return bindings.get("n", 0), bindings.get("k", 0)


def evaluate(
    expr: ast.SumExpr,
    bindings: Mapping[str, int],
    correction_table: CorrectionTable | None = None,
) -> int:
    """Evaluate ``expr`` by direct tree walking.

    ``bindings`` may also fix summation indices, which lets a summation
    body be evaluated on its own.
    """
    n, k = _check_bindings(expr, bindings)
    interp = _Interpreter(n, k, make_correction(correction_table))
    return interp.run(expr, {"n": n, "k": k, **bindings})


# compilation

_ALL = "ALL"
_EMPTY = "EMPTY"


def _ge(c0: int, c1: int, bound: int) -> tuple[int, int]:
    """Indices j in [0, bound) with c0 + c1*j >= 0, as a half-open range."""
    if c1 == 0:
        return (0, bound) if c0 >= 0 else (0, 0)
    if c1 > 0:
        lo = -(c0 // c1)  # ceil(-c0 / c1)
        return (max(lo, 0), bound)
    hi = c0 // -c1 + 1
    return (0, min(hi, bound))


def _meet(a: tuple[int, int], b: tuple[int, int]) -> tuple[int, int]:
    return (max(a[0], b[0]), min(a[1], b[1]))


def _join(a: tuple[int, int], b: tuple[int, int]) -> tuple[int, int]:
    if a[0] >= a[1]:
        return b
    if b[0] >= b[1]:
        return a
    return (min(a[0], b[0]), max(a[1], b[1]))


def _sum(term: Callable[[int], int], span: tuple[int, int], bound: int, index: str) -> int:
    lo, hi = span
    total = sum(map(term, range(lo, hi))) if lo < hi else 0
    if term(bound) != 0:
        raise NonTerminatingSum(index, bound)
    return total


def _var(name: str) -> str:
    return "v_" + name


def _affine_src(a: ast.AffineExpr) -> str:
    parts = [str(a.const)] if a.const or not a.terms else []
    for name, c in a.terms:
        parts.append(f"{c}*{_var(name)}" if c != 1 else _var(name))
    return "(" + "+".join(parts) + ")"


class _Compiler:
    def constraint(self, a: ast.AffineExpr, index: str) -> str:
        """Support of ``a >= 0`` over the summation index."""
        c1 = a.coeff(index)
        return f"_ge({_affine_src(a.without(index))}, {c1}, _J)"

    def support(self, node: ast.SumExpr, index: str) -> str:
        if isinstance(node, ast.IntegerLiteral):
            return _EMPTY if node.value == 0 else _ALL
        if isinstance(node, ast.Binomial):
            return self.meet(
                self.constraint(node.lower, index),
                self.constraint(node.upper - node.lower, index),
            )
        if isinstance(node, (ast.Fib, ast.Pow2)):
            return self.constraint(node.arg, index)
        if isinstance(node, ast.Eps):
            return self.constraint(node.arg - 1, index)
        if isinstance(node, ast.Negate):
            return self.support(node.child, index)
        if isinstance(node, ast.Mul):
            return self.meet(self.support(node.left, index), self.support(node.right, index))
        if isinstance(node, (ast.Add, ast.Sub)):
            return self.join(self.support(node.left, index), self.support(node.right, index))
        return _ALL

    @staticmethod
    def meet(a: str, b: str) -> str:
        if a == _EMPTY or b == _EMPTY:
            return _EMPTY
        if a == _ALL:
            return b
        if b == _ALL:
            return a
        return f"_meet({a}, {b})"

    @staticmethod
    def join(a: str, b: str) -> str:
        if a == _ALL or b == _ALL:
            return _ALL
        if a == _EMPTY:
            return b
        if b == _EMPTY:
            return a
        return f"_join({a}, {b})"

    def src(self, node: ast.SumExpr) -> str:
        if isinstance(node, ast.IntegerLiteral):
            return str(node.value)
        if isinstance(node, ast.Binomial):
            return f"_C({_affine_src(node.upper)}, {_affine_src(node.lower)})"
        if isinstance(node, ast.Fib):
            return f"_fib({_affine_src(node.arg)})"
        if isinstance(node, ast.Pow2):
            return f"_pow2({_affine_src(node.arg)})"
        if isinstance(node, ast.Eps):
            return f"_eps({_affine_src(node.arg)})"
        if isinstance(node, ast.AlternatingSign):
            return f"(-1 if {_var(node.index)} & 1 else 1)"
        if isinstance(node, ast.Add):
            return f"({self.src(node.left)} + {self.src(node.right)})"
        if isinstance(node, ast.Sub):
            return f"({self.src(node.left)} - {self.src(node.right)})"
        if isinstance(node, ast.Mul):
            if isinstance(node.left, ast.AlternatingSign):
                body = self.src(node.right)
                return f"(-{body} if {_var(node.left.index)} & 1 else {body})"
            return f"({self.src(node.left)} * {self.src(node.right)})"
        if isinstance(node, ast.Negate):
            return f"(-{self.src(node.child)})"
        if isinstance(node, ast.Sum):
            # nested sums may raise, so their terms are never skipped
            if ast.contains_sum(node.body):
                span = "(0, _J)"
            else:
                span = self.support(node.body, node.index)
                span = {"ALL": "(0, _J)", "EMPTY": "(0, 0)"}.get(span, span)
            term = f"(lambda {_var(node.index)}: {self.src(node.body)})"
            return f"_sum({term}, {span}, _J, {node.index!r})"
        raise TypeError(f"not an AST node: {node!r}")


def _source(expr: ast.SumExpr) -> str:
    body = _Compiler().src(expr)
    return (
        "def _compiled(v_n, v_k):\n"
        "    _J = (v_n if v_n > 0 else 0) + (v_k if v_k > 0 else 0) + 2\n"
        f"    return {body}\n"
    )


@functools.lru_cache(maxsize=256)
def _compile(expr: ast.SumExpr, table: tuple[int, ...] | None) -> Callable[[int, int], int]:
    namespace = {
        "_C": default_cache().binomial,
        "_fib": _fib,
        "_pow2": _pow2,
        "_eps": make_correction(table),
        "_ge": _ge,
        "_meet": _meet,
        "_join": _join,
        "_sum": _sum,
    }
    exec(compile(_source(expr), "<lattice-sum>", "exec"), namespace)
    return namespace["_compiled"]


def compile_expr(
    expr: ast.SumExpr, correction_table: CorrectionTable | None = None
) -> Callable[[int, int], int]:
    """Compile ``expr`` into a fast function ``f(n, k) -> int``.

    Unused parameters may be passed as 0.
    """
    table = tuple(correction_table) if correction_table is not None else None
    return _compile(expr, table)
