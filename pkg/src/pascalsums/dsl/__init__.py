"""A small language for lattice sums over the Pascal triangle.

>>> from pascalsums.dsl import parse_expression, evaluate
>>> evaluate(parse_expression("sum j [ C(n-2*j, k-j) ]"), {"n": 6, "k": 2})
20
"""
from .errors import (
    DslError,
    DslSyntaxError,
    IllegalCharacter,
    NonTerminatingSum,
    ShadowedIndex,
    UnboundVariable,
)
from .evaluator import compile_expr, evaluate, make_correction, safe_bound
from .lexer import Token, tokenize
from .nodes import (
    Add,
    AffineExpr,
    AlternatingSign,
    Binomial,
    Eps,
    Fib,
    Identity,
    IntegerLiteral,
    Mul,
    Negate,
    Pow2,
    Sub,
    Sum,
    SumExpr,
    free_parameters,
)
from .parser import parse, parse_expression, parse_identity, parse_text
from .printer import format_affine, pretty_print

__all__ = [
    "Add",
    "AffineExpr",
    "AlternatingSign",
    "Binomial",
    "DslError",
    "DslSyntaxError",
    "Eps",
    "Fib",
    "Identity",
    "IllegalCharacter",
    "IntegerLiteral",
    "Mul",
    "Negate",
    "NonTerminatingSum",
    "Pow2",
    "ShadowedIndex",
    "Sub",
    "Sum",
    "SumExpr",
    "Token",
    "UnboundVariable",
    "compile_expr",
    "evaluate",
    "format_affine",
    "free_parameters",
    "make_correction",
    "parse",
    "parse_expression",
    "parse_identity",
    "parse_text",
    "pretty_print",
    "safe_bound",
    "tokenize",
]
