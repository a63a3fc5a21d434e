"""Exceptions raised by the lattice-sum language."""
from __future__ import annotations


class DslError(Exception):
    """Base class for every language error."""


class IllegalCharacter(DslError):
    def __init__(self, position: int, char: str) -> None:
        super().__init__(position, char)
        self.position = position
        self.char = char

    def __str__(self) -> str:
        return f"illegal character {self.char!r} at offset {self.position}"


class DslSyntaxError(DslError):
    def __init__(self, position: int, expected: str, found: str = "") -> None:
        super().__init__(position, expected, found)
        self.position = position
        self.expected = expected
        self.found = found

    def __str__(self) -> str:
        got = f", found {self.found!r}" if self.found else ""
        return f"syntax error at offset {self.position}: expected {self.expected}{got}"


class UnboundVariable(DslError):
    def __init__(self, name: str) -> None:
        super().__init__(name)
        self.name = name

    def __str__(self) -> str:
        return f"unbound variable {self.name!r}"


class ShadowedIndex(DslError):
    def __init__(self, name: str) -> None:
        super().__init__(name)
        self.name = name

    def __str__(self) -> str:
        return f"summation index {self.name!r} shadows a parameter or an enclosing index"


class NonTerminatingSum(DslError):
    """A summation term at the safe bound did not vanish."""

    def __init__(self, index: str, bound: int, cell: tuple[int, int] | None = None) -> None:
        super().__init__(index, bound, cell)
        self.index = index
        self.bound = bound
        self.cell = cell

    def at_cell(self, n: int, k: int) -> "NonTerminatingSum":
        return NonTerminatingSum(self.index, self.bound, (n, k))

    def __str__(self) -> str:
        where = f" at cell {self.cell}" if self.cell is not None else ""
        return f"sum over {self.index!r} does not terminate: term at bound {self.bound} is nonzero{where}"
