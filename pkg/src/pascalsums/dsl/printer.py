"""Canonical text for ASTs; the output re-parses to an equal tree."""
from __future__ import annotations

from . import nodes as ast

_EXPR, _TERM, _FACTOR = 0, 1, 2


def format_affine(a: ast.AffineExpr) -> str:
    parts: list[str] = []
    for name, c in a.terms:
        mag = abs(c)
        body = name if mag == 1 else f"{mag}*{name}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"+{body}" if c > 0 else f"-{body}")
    if a.const or not parts:
        if not parts:
            parts.append(str(a.const) if a.const >= 0 else f"-{-a.const}")
        else:
            parts.append(f"+{a.const}" if a.const > 0 else f"-{-a.const}")
    return "".join(parts)


def _level(node: ast.SumExpr) -> int:
    if isinstance(node, (ast.Add, ast.Sub)):
        return _EXPR
    if isinstance(node, ast.Mul):
        return _TERM
    return _FACTOR


def _fmt(node: ast.SumExpr, need: int) -> str:
    text = _render(node)
    return f"({text})" if _level(node) < need else text


def _render(node: ast.SumExpr) -> str:
    if isinstance(node, ast.IntegerLiteral):
        return str(node.value)
    if isinstance(node, ast.Binomial):
        return f"C({format_affine(node.upper)}, {format_affine(node.lower)})"
    if isinstance(node, ast.Fib):
        return f"fib({format_affine(node.arg)})"
    if isinstance(node, ast.Pow2):
        return f"pow2({format_affine(node.arg)})"
    if isinstance(node, ast.Eps):
        return f"eps({format_affine(node.arg)})"
    if isinstance(node, ast.AlternatingSign):
        return f"(-1)^{node.index}"
    if isinstance(node, ast.Sum):
        return f"sum {node.index} [ {_render(node.body)} ]"
    if isinstance(node, ast.Negate):
        return "-" + _fmt(node.child, _FACTOR)
    if isinstance(node, ast.Add):
        return f"{_fmt(node.left, _EXPR)} + {_fmt(node.right, _TERM)}"
    if isinstance(node, ast.Sub):
        return f"{_fmt(node.left, _EXPR)} - {_fmt(node.right, _TERM)}"
    if isinstance(node, ast.Mul):
        return f"{_fmt(node.left, _TERM)} * {_fmt(node.right, _FACTOR)}"
    raise TypeError(f"not an AST node: {node!r}")


def pretty_print(node: ast.SumExpr | ast.Identity) -> str:
    if isinstance(node, ast.Identity):
        return f"{_render(node.lhs)} == {_render(node.rhs)}"
    return _render(node)
