"""Tokenizer for the lattice-sum language."""
from __future__ import annotations

import re
from typing import NamedTuple

from .errors import IllegalCharacter

KEYWORDS = frozenset({"C", "fib", "pow2", "eps", "sum"})

# `(-1)^j` is a single token; its value is the index name
_SIGN = re.compile(r"\(\s*-\s*1\s*\)\s*\^\s*([A-Za-z_][A-Za-z0-9_]*)")
_IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")
_INT = re.compile(r"[0-9]+")
_SPACE = re.compile(r"\s+")
_OPERATORS = ("==", "+", "-", "*", "^", "(", ")", "[", "]", ",")


class Token(NamedTuple):
    kind: str  # "int", "ident", "sign", a keyword, or the operator text
    text: str
    pos: int

    @property
    def value(self) -> int | str:
        if self.kind == "int":
            return int(self.text)
        if self.kind == "sign":
            return _SIGN.match(self.text).group(1)
        return self.text

    def __repr__(self) -> str:
        return f"Token({self.kind!r}, {self.text!r}, {self.pos})"


def tokenize(source: str) -> list[Token]:
    tokens: list[Token] = []
    pos = 0
    end = len(source)
    while pos < end:
        m = _SPACE.match(source, pos)
        if m:
            pos = m.end()
            continue
        m = _SIGN.match(source, pos)
        if m:
            tokens.append(Token("sign", m.group(0), pos))
            pos = m.end()
            continue
        m = _INT.match(source, pos)
        if m:
            tokens.append(Token("int", m.group(0), pos))
            pos = m.end()
            continue
        m = _IDENT.match(source, pos)
        if m:
            word = m.group(0)
            tokens.append(Token(word if word in KEYWORDS else "ident", word, pos))
            pos = m.end()
            continue
        for op in _OPERATORS:
            if source.startswith(op, pos):
                tokens.append(Token(op, op, pos))
                pos += len(op)
                break
        else:
            raise IllegalCharacter(pos, source[pos])
    return tokens
