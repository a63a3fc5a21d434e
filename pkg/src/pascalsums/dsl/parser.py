"""Recursive-descent parser for the lattice-sum language.

Grammar (whitespace-insensitive)::

    identity   = expr "==" expr
    expr       = term { ("+" | "-") term }
    term       = factor { "*" factor }
    factor     = integer | "-" factor | builtin | summation | signfactor | "(" expr ")"
    builtin    = "C" "(" affine "," affine ")" | ("fib" | "pow2" | "eps") "(" affine ")"
    summation  = "sum" identifier "[" expr "]"
    signfactor = "(-1)^" identifier
    affine     = ["-"] affineterm { ("+" | "-") affineterm }
    affineterm = integer | identifier | integer "*" identifier

Only ``n`` and ``k`` are free; every other name must be bound by an
enclosing ``sum``.
"""
from __future__ import annotations

from typing import Sequence

from . import nodes as ast
from .errors import DslSyntaxError, ShadowedIndex, UnboundVariable
from .lexer import Token, tokenize

_UNARY_BUILTINS = {"fib": ast.Fib, "pow2": ast.Pow2, "eps": ast.Eps}


class Parser:
    def __init__(self, tokens: Sequence[Token], source_length: int | None = None) -> None:
        self.tokens = list(tokens)
        self.i = 0
        if source_length is None:
            source_length = self.tokens[-1].pos + len(self.tokens[-1].text) if self.tokens else 0
        self.eof_pos = source_length
        self.scope: list[str] = []

    # token helpers

    def peek(self) -> Token | None:
        return self.tokens[self.i] if self.i < len(self.tokens) else None

    def at(self, kind: str) -> bool:
        tok = self.peek()
        return tok is not None and tok.kind == kind

    def expect(self, kind: str, what: str | None = None) -> Token:
        tok = self.peek()
        if tok is None or tok.kind != kind:
            self.fail(what or repr(kind))
        self.i += 1
        return tok

    def fail(self, expected: str):
        tok = self.peek()
        if tok is None:
            raise DslSyntaxError(self.eof_pos, expected, "end of input")
        raise DslSyntaxError(tok.pos, expected, tok.text)

    # grammar

    def parse_top(self) -> ast.SumExpr | ast.Identity:
        lhs = self.expr()
        if self.at("=="):
            self.i += 1
            rhs = self.expr()
            result: ast.SumExpr | ast.Identity = ast.Identity(lhs, rhs)
        else:
            result = lhs
        if self.peek() is not None:
            self.fail("end of input")
        return result

    def expr(self) -> ast.SumExpr:
        node = self.term()
        while self.at("+") or self.at("-"):
            op = self.expect(self.peek().kind)
            right = self.term()
            node = ast.Add(node, right) if op.kind == "+" else ast.Sub(node, right)
        return node

    def term(self) -> ast.SumExpr:
        node = self.factor()
        while self.at("*"):
            self.i += 1
            node = ast.Mul(node, self.factor())
        return node

    def factor(self) -> ast.SumExpr:
        tok = self.peek()
        if tok is None:
            self.fail("a factor")
        kind = tok.kind
        if kind == "int":
            self.i += 1
            return ast.IntegerLiteral(int(tok.text))
        if kind == "-":
            self.i += 1
            return ast.Negate(self.factor())
        if kind == "C":
            self.i += 1
            self.expect("(")
            upper = self.affine()
            self.expect(",")
            lower = self.affine()
            self.expect(")")
            return ast.Binomial(upper, lower)
        if kind in _UNARY_BUILTINS:
            self.i += 1
            self.expect("(")
            arg = self.affine()
            self.expect(")")
            return _UNARY_BUILTINS[kind](arg)
        if kind == "sum":
            self.i += 1
            name = self.expect("ident", "a summation index").text
            if name in ast.FREE_PARAMETERS or name in self.scope:
                raise ShadowedIndex(name)
            self.expect("[")
            self.scope.append(name)
            try:
                body = self.expr()
            finally:
                self.scope.pop()
            self.expect("]")
            return ast.Sum(name, body)
        if kind == "sign":
            self.i += 1
            name = tok.value
            if name not in self.scope:
                raise UnboundVariable(name)
            return ast.AlternatingSign(name)
        if kind == "(":
            self.i += 1
            node = self.expr()
            self.expect(")")
            return node
        self.fail("a factor")

    def affine(self) -> ast.AffineExpr:
        negate = False
        if self.at("-"):
            self.i += 1
            negate = True
        total = self.affine_term()
        if negate:
            total = -total
        while self.at("+") or self.at("-"):
            op = self.expect(self.peek().kind)
            t = self.affine_term()
            total = total + t if op.kind == "+" else total - t
        return total

    def affine_term(self) -> ast.AffineExpr:
        if self.at("int"):
            value = int(self.expect("int").text)
            if self.at("*"):
                self.i += 1
                return ast.AffineExpr.var(self.variable(), value)
            return ast.AffineExpr(value)
        if self.at("ident"):
            return ast.AffineExpr.var(self.variable())
        self.fail("an integer or a variable")

    def variable(self) -> str:
        name = self.expect("ident", "a variable").text
        if name not in ast.FREE_PARAMETERS and name not in self.scope:
            raise UnboundVariable(name)
        return name


def parse(tokens: Sequence[Token], source_length: int | None = None) -> ast.SumExpr | ast.Identity:
    """Parse a token sequence into an expression or an identity."""
    return Parser(tokens, source_length).parse_top()


def parse_text(source: str) -> ast.SumExpr | ast.Identity:
    return parse(tokenize(source), len(source))


def parse_expression(source: str) -> ast.SumExpr:
    result = parse_text(source)
    if isinstance(result, ast.Identity):
        raise DslSyntaxError(source.index("=="), "an expression without '=='")
    return result


def parse_identity(source: str) -> ast.Identity:
    result = parse_text(source)
    if not isinstance(result, ast.Identity):
        raise DslSyntaxError(len(source), "'==' followed by a right-hand side", "end of input")
    return result
