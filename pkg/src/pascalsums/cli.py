"""Command-line driver.

Exit codes: 0 when everything verified, 1 when a counterexample was found,
2 for usage, parse or evaluation errors.

Built-in identity names (usable wherever a SOURCE is expected)::

    eq1      sum j [ C(n, j) ] == pow2(n)
    eq2      sum j [ C(n-j, k) ] == C(n+1, k+1)
    eq3      sum j [ C(n-j, j) ] == fib(n)
    theorem  sum j [ C(n-2*j, k-j) ] == sum j [ (-1)^j * C(n+1-j, k+1+j) ] + eps(n-2*k)
"""
from __future__ import annotations

import argparse
import json
import os
import sys
import time
from pathlib import Path
from typing import Sequence

from . import core, sums
from .dsl import DslError, Identity, compile_expr, evaluate, parse_identity, parse_text
from .identities import BUILTIN_IDENTITIES
from .verifier import (
    IdentityReport,
    Region,
    check_identity,
    check_pascal_recurrence,
    inductive_proof_check,
)

EXIT_OK, EXIT_FAILED, EXIT_USAGE = 0, 1, 2
FORMATS = ("text", "csv", "json")
RECURRENCE_TARGETS = {
    "vertical": sums.vertical_partial_sum,
    "theorem-rhs": sums.theorem_rhs,
}


class UsageError(Exception):
    pass


def _non_negative(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be non-negative, got {value}")
    return value


def _positive(text: str) -> int:
    value = _non_negative(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return value


def _table(text: str) -> tuple[int, ...]:
    try:
        values = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a list of integers: {text!r}") from None
    if len(values) != 6:
        raise argparse.ArgumentTypeError("the correction table needs six entries (residues 0..5)")
    return values


def load_identities(source: str) -> list[tuple[str, Identity]]:
    """Resolve a built-in name or read one identity per line from a file."""
    if source in BUILTIN_IDENTITIES:
        text = BUILTIN_IDENTITIES[source]
        return [(text, parse_identity(text))]
    try:
        lines = Path(source).read_text().splitlines()
    except OSError as exc:
        raise UsageError(f"cannot read {source!r}: {exc.strerror or exc}") from None
    out = []
    for lineno, line in enumerate(lines, 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        try:
            out.append((line, parse_identity(line)))
        except DslError as exc:
            raise UsageError(f"{source}:{lineno}: {exc}") from None
    if not out:
        raise UsageError(f"{source!r} holds no identities")
    return out


def _emit_reports(reports: list[IdentityReport], fmt: str, report_path: str | None) -> int:
    payload = [r.to_dict() for r in reports]
    if report_path:
        Path(report_path).write_text(json.dumps(payload, indent=2) + "\n")
    if fmt == "json":
        print(json.dumps(payload, indent=2))
    elif fmt == "csv":
        print("identity,n_max,cells_checked,verdict,counterexamples,elapsed_ms")
        for r in reports:
            ident = '"' + r.identity_text.replace('"', '""') + '"'
            print(
                f"{ident},{r.n_max},{r.cells_checked},{r.verdict},"
                f"{len(r.counterexamples)},{r.elapsed_ms}"
            )
    else:
        for r in reports:
            print(r.summary())
    return EXIT_OK if all(r.verified for r in reports) else EXIT_FAILED


def cmd_row(args) -> int:
    if args.n < 0:
        raise UsageError(f"row index must be non-negative, got {args.n}")
    values = [str(v) for v in core.row(args.n)]
    if args.format == "csv":
        print(",".join(values))
    elif args.format == "json":
        print(json.dumps(values))
    else:
        print(" ".join(values))
    return EXIT_OK


def cmd_eval(args) -> int:
    node = parse_text(args.expression)
    bindings = {}
    if args.n is not None:
        bindings["n"] = args.n
    if args.k is not None:
        bindings["k"] = args.k
    if isinstance(node, Identity):
        lhs = evaluate(node.lhs, bindings)
        rhs = evaluate(node.rhs, bindings)
        print(f"{lhs} {'==' if lhs == rhs else '!='} {rhs}")
        return EXIT_OK if lhs == rhs else EXIT_FAILED
    print(evaluate(node, bindings))
    return EXIT_OK


def cmd_verify(args) -> int:
    reports = [
        check_identity(ident, Region(args.n_max), jobs=args.jobs,
                       correction_table=args.correction_table, label=text)
        for text, ident in load_identities(args.source)
    ]
    return _emit_reports(reports, args.format, args.report)


def cmd_recurrence(args) -> int:
    c = 0 if args.no_line_correction else 1
    f = RECURRENCE_TARGETS[args.target]
    report = check_pascal_recurrence(f, Region(args.n_max), c, jobs=args.jobs)
    return _emit_reports([report], args.format, args.report)


def cmd_prove(args) -> int:
    reports = [
        inductive_proof_check(ident, args.n_max, jobs=args.jobs,
                              correction_table=args.correction_table, label=text)
        for text, ident in load_identities(args.source)
    ]
    return _emit_reports(reports, args.format, args.report)


def cmd_bench(args) -> int:
    cache = core.TriangleCache()
    start = time.perf_counter()
    cache.extend_to(args.rows)
    row_s = time.perf_counter() - start
    cells = (args.rows + 1) * (args.rows + 2) // 2
    print(f"row generation: {args.rows + 1} rows, {cells} cells in {row_s:.3f}s "
          f"({cells / max(row_s, 1e-9):.0f} cells/second)")

    theorem = parse_identity(BUILTIN_IDENTITIES["theorem"])
    compile_expr(theorem.lhs), compile_expr(theorem.rhs)
    start = time.perf_counter()
    report = check_identity(theorem, Region(args.n_max), jobs=args.jobs)
    verify_s = time.perf_counter() - start
    print(f"theorem verification: {report.verdict}, {report.cells_checked} cells in "
          f"{verify_s:.3f}s ({report.cells_checked / max(verify_s, 1e-9):.0f} cells/second)")
    return EXIT_OK if report.verified else EXIT_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pascalsums",
        description="Evaluate and verify additive identities in the Pascal triangle.",
        epilog=__doc__.split("\n\n", 2)[2],
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("row", help="print a row of the triangle")
    p.add_argument("n", type=int)
    p.add_argument("--format", choices=FORMATS, default="text")
    p.set_defaults(func=cmd_row)

    p = sub.add_parser("eval", help="evaluate an expression at one cell")
    p.add_argument("expression")
    p.add_argument("-n", type=int)
    p.add_argument("-k", type=int)
    p.set_defaults(func=cmd_eval)

    def add_report_flags(p, default_n_max):
        p.add_argument("--n-max", type=_non_negative, default=default_n_max)
        p.add_argument("--jobs", type=_positive, default=1)
        p.add_argument("--report", metavar="PATH", help="write the JSON report here")
        p.add_argument("--format", choices=FORMATS, default="text")

    p = sub.add_parser("verify", help="check identities on every cell up to --n-max")
    p.add_argument("source", help="built-in name (eq1, eq2, eq3, theorem) or a file")
    add_report_flags(p, 100)
    p.add_argument("--correction-table", type=_table, metavar="E0,...,E5",
                   help="replace the eps residue table, e.g. --correction-table=0,1,1,0,-1,-1")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("recurrence", help="check the corrected Pascal recurrence")
    p.add_argument("--target", choices=sorted(RECURRENCE_TARGETS), default="vertical")
    p.add_argument("--no-line-correction", action="store_true",
                   help="drop the +1 on the line n = 2k")
    add_report_flags(p, 100)
    p.set_defaults(func=cmd_recurrence)

    p = sub.add_parser("prove", help="replay the induction argument up to --n-max")
    p.add_argument("source", help="built-in name or a file of two-parameter identities")
    add_report_flags(p, 100)
    p.add_argument("--correction-table", type=_table, metavar="E0,...,E5")
    p.set_defaults(func=cmd_prove)

    p = sub.add_parser("bench", help="time row generation and theorem verification")
    p.add_argument("--rows", type=_non_negative, default=2000)
    p.add_argument("--n-max", type=_non_negative, default=300)
    p.add_argument("--jobs", type=_positive, default=1)
    p.set_defaults(func=cmd_bench)
    return parser


def _presize_from_env() -> None:
    raw = os.environ.get("PASCAL_CACHE_ROWS")
    if not raw:
        return
    try:
        rows = int(raw)
    except ValueError:
        raise UsageError(f"PASCAL_CACHE_ROWS must be an integer, got {raw!r}") from None
    if rows < 0:
        raise UsageError("PASCAL_CACHE_ROWS must be non-negative")
    core.presize_cache(rows)


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        _presize_from_env()
        return args.func(args)
    except (UsageError, DslError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
