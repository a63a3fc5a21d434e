"""Range verification of identities and of the corrected Pascal recurrence.

Cells are visited row-major.  With ``jobs > 1`` rows are dealt round-robin
to worker processes, each with its own row cache; counterexamples are
merged and sorted by cell, so reports do not depend on the worker count.
"""
from __future__ import annotations

import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterator, NamedTuple, Sequence

from .dsl import Identity, NonTerminatingSum, compile_expr, parse_identity, pretty_print
from .dsl.nodes import SumExpr

VERIFIED = "VERIFIED"
FAILED = "FAILED"

CellFunction = Callable[[int, int], int]

REPORT_SCHEMA = {
    "type": "object",
    "required": ["identity", "n_max", "cells_checked", "verdict", "counterexamples", "elapsed_ms"],
    "properties": {
        "identity": {"type": "string"},
        "n_max": {"type": "integer", "minimum": 0},
        "cells_checked": {"type": "integer", "minimum": 0},
        "verdict": {"enum": [VERIFIED, FAILED]},
        "counterexamples": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["n", "k", "lhs", "rhs"],
                "properties": {
                    "n": {"type": "integer"},
                    "k": {"type": "integer"},
                    "lhs": {"type": "string", "pattern": "^-?[0-9]+$"},
                    "rhs": {"type": "string", "pattern": "^-?[0-9]+$"},
                },
                "additionalProperties": False,
            },
        },
        "elapsed_ms": {"type": "integer", "minimum": 0},
    },
    "additionalProperties": False,
}


class IdentityArityError(ValueError):
    """The identity does not mention both ``n`` and ``k``."""


@dataclass(frozen=True)
class Region:
    """All cells 0 <= k <= n <= n_max."""

    n_max: int

    def __post_init__(self) -> None:
        if self.n_max < 0:
            raise ValueError("n_max must be non-negative")

    def __iter__(self) -> Iterator[tuple[int, int]]:
        for n in range(self.n_max + 1):
            for k in range(n + 1):
                yield n, k

    def __len__(self) -> int:
        return (self.n_max + 1) * (self.n_max + 2) // 2


class Counterexample(NamedTuple):
    n: int
    k: int
    lhs: int
    rhs: int


@dataclass
class IdentityReport:
    identity_text: str
    n_max: int
    cells_checked: int
    counterexamples: list[Counterexample] = field(default_factory=list)
    elapsed_ms: int = 0

    @property
    def verdict(self) -> str:
        return FAILED if self.counterexamples else VERIFIED

    @property
    def verified(self) -> bool:
        return not self.counterexamples

    def to_dict(self) -> dict:
        return {
            "identity": self.identity_text,
            "n_max": self.n_max,
            "cells_checked": self.cells_checked,
            "verdict": self.verdict,
            "counterexamples": [
                {"n": c.n, "k": c.k, "lhs": str(c.lhs), "rhs": str(c.rhs)}
                for c in self.counterexamples
            ],
            "elapsed_ms": self.elapsed_ms,
        }

    def to_json(self, indent: int | None = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent)

    def summary(self) -> str:
        line = (
            f"{self.verdict} {self.identity_text} n_max={self.n_max} "
            f"cells={self.cells_checked} elapsed_ms={self.elapsed_ms}"
        )
        if self.counterexamples:
            c = self.counterexamples[0]
            line += (
                f" first_counterexample=({c.n},{c.k}) lhs={c.lhs} rhs={c.rhs}"
                f" total_counterexamples={len(self.counterexamples)}"
            )
        return line


@dataclass
class ProofReport(IdentityReport):
    """Outcome of the induction replay; ``stages`` keeps each part."""

    stages: dict[str, IdentityReport] = field(default_factory=dict)

    def summary(self) -> str:
        lines = [super().summary()]
        for name, stage in self.stages.items():
            lines.append(f"  {name}: {stage.summary()}")
        return "\n".join(lines)


def _ms_since(start: float) -> int:
    return int(round((time.perf_counter() - start) * 1000))


def _deal_rows(n_max: int, jobs: int) -> list[list[int]]:
    return [list(range(w, n_max + 1, jobs)) for w in range(jobs)]


def _run_partitioned(worker, args_for: Callable[[list[int]], tuple], n_max: int, jobs: int):
    if jobs < 1:
        raise ValueError("jobs must be at least 1")
    if jobs == 1:
        return [worker(*args_for(list(range(n_max + 1))))]
    parts = [p for p in _deal_rows(n_max, jobs) if p]
    with ProcessPoolExecutor(max_workers=len(parts)) as pool:
        return list(pool.map(worker, *zip(*(args_for(p) for p in parts))))


# identity checks

def _identity_rows(
    identity: Identity, rows: list[int], table: tuple[int, ...] | None
) -> tuple[int, list[Counterexample]]:
    lhs = compile_expr(identity.lhs, table)
    rhs = compile_expr(identity.rhs, table)
    found = []
    checked = 0
    for n in rows:
        for k in range(n + 1):
            try:
                a = lhs(n, k)
                b = rhs(n, k)
            except NonTerminatingSum as exc:
                raise exc.at_cell(n, k) from None
            checked += 1
            if a != b:
                found.append(Counterexample(n, k, a, b))
    return checked, found


def _as_identity(identity: Identity | str) -> tuple[Identity, str]:
    if isinstance(identity, str):
        return parse_identity(identity), identity.strip()
    return identity, pretty_print(identity)


def check_identity(
    identity: Identity | str,
    region: Region | int,
    jobs: int = 1,
    correction_table: Sequence[int] | None = None,
    label: str | None = None,
) -> IdentityReport:
    """Evaluate both sides at every cell of ``region`` and collect mismatches."""
    start = time.perf_counter()
    ident, text = _as_identity(identity)
    if isinstance(region, int):
        region = Region(region)
    table = tuple(correction_table) if correction_table is not None else None
    results = _run_partitioned(
        _identity_rows, lambda rows: (ident, rows, table), region.n_max, jobs
    )
    checked = sum(r[0] for r in results)
    found = sorted((c for r in results for c in r[1]), key=lambda c: (c.n, c.k))
    return IdentityReport(label or text, region.n_max, checked, found, _ms_since(start))


# recurrence checks

class _ZeroExtended:
    def __init__(self, f: CellFunction) -> None:
        self.f = f

    def __call__(self, n: int, k: int) -> int:
        return self.f(n, k) if 0 <= k <= n else 0


def _recurrence_rows(
    f: CellFunction, rows: list[int], c: int, k_range: Callable[[int], range]
) -> tuple[int, list[Counterexample]]:
    found = []
    checked = 0
    prev_n = None
    prev: dict[int, int] = {}
    for n in rows:
        if n < 1:
            continue
        if prev_n != n - 1:
            prev = {k: f(n - 1, k) for k in k_range(n - 1)}
        cur = {k: f(n, k) for k in k_range(n)}
        for k in range(n + 1):
            expected = prev[k] + prev[k - 1] + (c if n == 2 * k else 0)
            checked += 1
            if cur[k] != expected:
                found.append(Counterexample(n, k, cur[k], expected))
        prev, prev_n = cur, n
    return checked, found


def _triangle_k(m: int) -> range:
    return range(-1, m + 2)


class ExprFunction:
    """A picklable cell function backed by a compiled expression."""

    def __init__(self, expr: SumExpr, correction_table: Sequence[int] | None = None) -> None:
        self.expr = expr
        self.table = tuple(correction_table) if correction_table is not None else None
        self._fn: CellFunction | None = None

    def __getstate__(self) -> dict:
        return {"expr": self.expr, "table": self.table, "_fn": None}

    def __call__(self, n: int, k: int) -> int:
        if self._fn is None:
            self._fn = compile_expr(self.expr, self.table)
        try:
            return self._fn(n, k)
        except NonTerminatingSum as exc:
            raise exc.at_cell(n, k) from None


def _recurrence_report(
    f: CellFunction, n_max: int, c: int, label: str, jobs: int
) -> IdentityReport:
    start = time.perf_counter()
    results = _run_partitioned(
        _recurrence_rows, lambda rows: (f, rows, c, _triangle_k), n_max, jobs
    )
    checked = sum(r[0] for r in results)
    found = sorted((x for r in results for x in r[1]), key=lambda x: (x.n, x.k))
    return IdentityReport(label, n_max, checked, found, _ms_since(start))


def check_pascal_recurrence(
    f: CellFunction,
    region: Region | int,
    on_line_correction: int = 1,
    jobs: int = 1,
    label: str | None = None,
) -> IdentityReport:
    """Check f(n,k) = f(n-1,k) + f(n-1,k-1) + c*[n = 2k] for every cell with n >= 1.

    ``f`` is only called on triangle cells; it is taken to be 0 elsewhere.
    Counterexamples carry ``lhs = f(n, k)`` and ``rhs`` = the recurrence value.
    """
    if isinstance(region, int):
        region = Region(region)
    name = label or getattr(f, "__name__", "f")
    text = f"{name}(n,k) == {name}(n-1,k) + {name}(n-1,k-1) + {on_line_correction}*[n==2k]"
    return _recurrence_report(_ZeroExtended(f), region.n_max, on_line_correction, text, jobs)


# induction replay

def _base_rows(
    identity: Identity, rows: list[int], table: tuple[int, ...] | None
) -> tuple[int, list[Counterexample]]:
    lhs = ExprFunction(identity.lhs, table)
    rhs = ExprFunction(identity.rhs, table)
    found = []
    checked = 0
    for n in rows:
        for k in sorted({0, n}):
            a, b = lhs(n, k), rhs(n, k)
            checked += 1
            if a != b:
                found.append(Counterexample(n, k, a, b))
    return checked, found


def inductive_proof_check(
    identity: Identity | str,
    n_max: int,
    jobs: int = 1,
    correction_table: Sequence[int] | None = None,
    on_line_correction: int = 1,
    label: str | None = None,
) -> ProofReport:
    """Replay the induction proof of ``identity`` on rows ``0..n_max``.

    Base columns k = 0 and k = n must agree, and each side must satisfy the
    corrected Pascal recurrence on every cell with n >= 1.  Sides are
    evaluated literally at the off-triangle cells k = -1 and k = n + 1.
    Together these force agreement on the whole region; the identity is
    also checked directly as a cross-check.
    """
    start = time.perf_counter()
    ident, text = _as_identity(identity)
    text = label or text
    if ident.free_parameters != {"n", "k"}:
        raise IdentityArityError(
            "induction needs an identity in both n and k; "
            f"this one uses only {sorted(ident.free_parameters) or 'no parameters'}"
        )
    region = Region(n_max)
    table = tuple(correction_table) if correction_table is not None else None

    results = _run_partitioned(_base_rows, lambda rows: (ident, rows, table), n_max, jobs)
    base = IdentityReport(
        f"base columns of {text}",
        n_max,
        sum(r[0] for r in results),
        sorted((c for r in results for c in r[1]), key=lambda c: (c.n, c.k)),
    )
    stages = {"base": base}
    for side, expr in (("lhs_recurrence", ident.lhs), ("rhs_recurrence", ident.rhs)):
        stages[side] = _recurrence_report(
            ExprFunction(expr, table), n_max, on_line_correction, f"{side} of {text}", jobs
        )
    cross = check_identity(ident, region, jobs=jobs, correction_table=table, label=text)
    stages["cross_check"] = cross

    induction_holds = all(s.verified for name, s in stages.items() if name != "cross_check")
    if induction_holds and not cross.verified:
        raise AssertionError("induction certificate holds but the identity fails directly")
    found = sorted(
        (c for s in stages.values() for c in s.counterexamples), key=lambda c: (c.n, c.k)
    )
    return ProofReport(text, n_max, len(region), found, _ms_since(start), stages=stages)
