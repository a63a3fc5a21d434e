"""AST of the lattice-sum language.

Nodes are frozen dataclasses, so structural equality is ``==`` and trees
can be shared freely between threads and pickled to worker processes.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Mapping, Union

from .errors import UnboundVariable

FREE_PARAMETERS = ("n", "k")


def _var_order(name: str) -> tuple[int, str]:
    if name in FREE_PARAMETERS:
        return (FREE_PARAMETERS.index(name), "")
    return (len(FREE_PARAMETERS), name)


@dataclass(frozen=True)
class AffineExpr:
    """``const + sum(coeff * var)``; zero coefficients are dropped."""

    const: int = 0
    terms: tuple[tuple[str, int], ...] = ()

    @classmethod
    def build(cls, const: int = 0, coeffs: Mapping[str, int] | None = None) -> "AffineExpr":
        items = [(v, c) for v, c in (coeffs or {}).items() if c != 0]
        items.sort(key=lambda item: _var_order(item[0]))
        return cls(const, tuple(items))

    @classmethod
    def var(cls, name: str, coeff: int = 1) -> "AffineExpr":
        return cls.build(0, {name: coeff})

    def coeff(self, name: str) -> int:
        for v, c in self.terms:
            if v == name:
                return c
        return 0

    @property
    def variables(self) -> frozenset[str]:
        return frozenset(v for v, _ in self.terms)

    def __add__(self, other: "AffineExpr | int") -> "AffineExpr":
        if isinstance(other, int):
            return AffineExpr(self.const + other, self.terms)
        coeffs = dict(self.terms)
        for v, c in other.terms:
            coeffs[v] = coeffs.get(v, 0) + c
        return AffineExpr.build(self.const + other.const, coeffs)

    def __neg__(self) -> "AffineExpr":
        return AffineExpr(-self.const, tuple((v, -c) for v, c in self.terms))

    def __sub__(self, other: "AffineExpr | int") -> "AffineExpr":
        return self + (-other)

    def without(self, name: str) -> "AffineExpr":
        return AffineExpr(self.const, tuple((v, c) for v, c in self.terms if v != name))

    def evaluate(self, env: Mapping[str, int]) -> int:
        total = self.const
        for v, c in self.terms:
            if v not in env:
                raise UnboundVariable(v)
            total += c * env[v]
        return total


@dataclass(frozen=True)
class IntegerLiteral:
    value: int

    def __post_init__(self) -> None:
        if self.value < 0:
            raise ValueError("integer literals are non-negative; wrap them in Negate")


@dataclass(frozen=True)
class Binomial:
    upper: AffineExpr
    lower: AffineExpr


@dataclass(frozen=True)
class Fib:
    arg: AffineExpr


@dataclass(frozen=True)
class Pow2:
    arg: AffineExpr


@dataclass(frozen=True)
class Eps:
    arg: AffineExpr


@dataclass(frozen=True)
class AlternatingSign:
    index: str


@dataclass(frozen=True)
class Sum:
    index: str
    body: "SumExpr"


@dataclass(frozen=True)
class Add:
    left: "SumExpr"
    right: "SumExpr"


@dataclass(frozen=True)
class Sub:
    left: "SumExpr"
    right: "SumExpr"


@dataclass(frozen=True)
class Mul:
    left: "SumExpr"
    right: "SumExpr"


@dataclass(frozen=True)
class Negate:
    child: "SumExpr"


SumExpr = Union[
    IntegerLiteral, Binomial, Fib, Pow2, Eps, AlternatingSign, Sum, Add, Sub, Mul, Negate
]
BUILTINS = (Binomial, Fib, Pow2, Eps)
BINARY = (Add, Sub, Mul)


@dataclass(frozen=True)
class Identity:
    lhs: SumExpr
    rhs: SumExpr

    @property
    def free_parameters(self) -> frozenset[str]:
        return free_parameters(self.lhs) | free_parameters(self.rhs)


def affine_args(node: SumExpr) -> tuple[AffineExpr, ...]:
    if isinstance(node, Binomial):
        return (node.upper, node.lower)
    if isinstance(node, (Fib, Pow2, Eps)):
        return (node.arg,)
    return ()


def walk(node: SumExpr) -> Iterator[SumExpr]:
    yield node
    if isinstance(node, BINARY):
        yield from walk(node.left)
        yield from walk(node.right)
    elif isinstance(node, Negate):
        yield from walk(node.child)
    elif isinstance(node, Sum):
        yield from walk(node.body)


def free_parameters(node: SumExpr) -> frozenset[str]:
    """Which of ``n``, ``k`` the expression mentions."""
    used: set[str] = set()
    for sub in walk(node):
        for arg in affine_args(sub):
            used |= arg.variables
    return frozenset(used) & frozenset(FREE_PARAMETERS)


def contains_sum(node: SumExpr) -> bool:
    return any(isinstance(sub, Sum) for sub in walk(node))
