"""``bncalc`` command-line front end.

Exit codes: 0 on success, 1 when a verification or example comparison
fails, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from collections.abc import Sequence
from typing import Final

from bncalc.exactmath import NonIntegralResult, decimal_str
from bncalc.invariants import COLUMNS, InternalInconsistency, full_invariants
from bncalc.verify import (
    EXAMPLES,
    ExampleRow,
    VerificationReport,
    check_names,
    reproduce_example,
    run_checks,
)

FORMATS: Final[tuple[str, ...]] = ("json", "csv", "markdown", "plain")

EXIT_OK: Final[int] = 0
EXIT_FAILED: Final[int] = 1
EXIT_USAGE: Final[int] = 2


# ---------------------------------------------------------------------------
# rendering helpers


def _csv(header: Sequence[str], rows: Sequence[Sequence[str]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue().rstrip("\n")


def _markdown(header: Sequence[str], rows: Sequence[Sequence[str]]) -> str:
    lines = ["| " + " | ".join(header) + " |", "|" + "|".join("---" for _ in header) + "|"]
    lines.extend("| " + " | ".join(row) + " |" for row in rows)
    return "\n".join(lines)


def _plain_table(header: Sequence[str], rows: Sequence[Sequence[str]]) -> str:
    widths = [max(len(cell) for cell in col) for col in zip(header, *rows)]
    out = []
    for row in (header, *rows):
        cells = [row[0].ljust(widths[0])] + [c.rjust(w) for c, w in zip(row[1:], widths[1:])]
        out.append("  ".join(cells).rstrip())
    return "\n".join(out)


def _table(fmt: str, header: Sequence[str], rows: Sequence[Sequence[str]]) -> str:
    if fmt == "csv":
        return _csv(header, rows)
    if fmt == "markdown":
        return _markdown(header, rows)
    return _plain_table(header, rows)


def _json(obj: object) -> str:
    return json.dumps(obj, ensure_ascii=False, separators=(",", ":"))


def invariant_row(a: int) -> dict[str, str]:
    return {key: decimal_str(value) for key, value in full_invariants(a).as_row().items()}


# ---------------------------------------------------------------------------
# subcommands


def cmd_invariants(a: int, fmt: str) -> tuple[int, str]:
    row = invariant_row(a)
    if fmt == "json":
        return EXIT_OK, _json(row)
    if fmt == "plain":
        return EXIT_OK, "\n".join(f"{k} = {v}" for k, v in row.items())
    return EXIT_OK, _table(fmt, COLUMNS, [list(row.values())])


def cmd_table(a_min: int, a_max: int, fmt: str) -> tuple[int, str]:
    rows = [invariant_row(a) for a in range(a_min, a_max + 1)]
    if fmt == "json":
        return EXIT_OK, _json(rows)
    return EXIT_OK, _table(fmt, COLUMNS, [list(r.values()) for r in rows])


def render_report(report: VerificationReport, fmt: str) -> str:
    if fmt == "json":
        return _json(report.to_json_obj())
    header = ("check", "passes", "failures")
    fails = {name: 0 for name in report.checks}
    for f in report.failures:
        fails[f.check] += 1
    rows = [[name, str(report.pass_counts[name]), str(fails[name])] for name in report.checks]
    if fmt == "csv":
        return _csv(header, rows)
    lo, hi = report.range
    lines = [
        f"range a = {lo}..{hi}",
        _table(fmt, header, rows),
        "",
        report.summary(),
    ]
    if report.failures:
        lines.append("")
        lines.extend(f"FAIL {f.message}" for f in report.failures)
    return "\n".join(lines)


def cmd_verify(a_min: int, a_max: int, checks: Sequence[str] | None, fmt: str, jobs: int = 1) -> tuple[int, str]:
    report = run_checks(a_min, a_max, checks, workers=jobs)
    print(f"verified in {report.elapsed:.2f}s", file=sys.stderr)
    return (EXIT_OK if report.all_passed else EXIT_FAILED), render_report(report, fmt)


def render_example(name: str, rows: Sequence[ExampleRow], fmt: str) -> str:
    if fmt == "json":
        a, _ = EXAMPLES[name]
        return _json(
            {
                "example": name,
                "a": str(a),
                "all_match": all(r.match for r in rows),
                "rows": [r._asdict() for r in rows],
            }
        )
    header = ("quantity", "computed", "expected", "match")
    mark = {True: "✓", False: "✗"} if fmt != "csv" else {True: "true", False: "false"}
    return _table(fmt, header, [[r.label, r.computed, r.expected, mark[r.match]] for r in rows])


def cmd_example(name: str, fmt: str) -> tuple[int, str]:
    rows = reproduce_example(name)
    code = EXIT_OK if all(r.match for r in rows) else EXIT_FAILED
    return code, render_example(name, rows, fmt)


# ---------------------------------------------------------------------------
# parser


def _parameter(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid integer: {text!r}") from None
    if value < 2:
        raise argparse.ArgumentTypeError("a must be ≥ 2")
    return value


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid integer: {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError("must be ≥ 1")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bncalc",
        description="Exact invariants of the Brill-Noether curve W^1_{a+2}(C) of a general genus 2a+1 curve.",
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def add_format(p: argparse.ArgumentParser) -> None:
        p.add_argument("--format", choices=FORMATS, default="plain", help="output format (default: plain)")

    def add_range(p: argparse.ArgumentParser) -> None:
        p.add_argument("--a-min", type=_parameter, required=True, metavar="N")
        p.add_argument("--a-max", type=_parameter, required=True, metavar="N")

    p = sub.add_parser("invariants", help="all invariants for one value of a")
    p.add_argument("--a", type=_parameter, required=True, metavar="N")
    add_format(p)

    p = sub.add_parser("table", help="one row of invariants per a in a range")
    add_range(p)
    add_format(p)

    p = sub.add_parser("verify", help="run the identity checks over a range of a")
    p.add_argument(
        "--check",
        action="append",
        choices=check_names(),
        metavar="NAME",
        help="restrict to this check (repeatable); one of: " + ", ".join(check_names()),
    )
    add_range(p)
    p.add_argument("--jobs", type=_positive, default=1, metavar="N", help="worker processes (default: 1)")
    add_format(p)

    p = sub.add_parser("example", help="reproduce a worked example (genus7 or genus9)")
    p.add_argument("name", metavar="NAME", help="one of: " + ", ".join(EXAMPLES))
    add_format(p)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE

    if args.command in ("table", "verify") and args.a_min > args.a_max:
        print(f"bncalc: error: --a-min ({args.a_min}) must not exceed --a-max ({args.a_max})", file=sys.stderr)
        return EXIT_USAGE
    if args.command == "example" and args.name not in EXAMPLES:
        print(f"bncalc: error: unknown example {args.name!r}; choose from {', '.join(EXAMPLES)}", file=sys.stderr)
        return EXIT_USAGE

    try:
        if args.command == "invariants":
            code, text = cmd_invariants(args.a, args.format)
        elif args.command == "table":
            code, text = cmd_table(args.a_min, args.a_max, args.format)
        elif args.command == "verify":
            code, text = cmd_verify(args.a_min, args.a_max, args.check, args.format, args.jobs)
        else:
            code, text = cmd_example(args.name, args.format)
    except (NonIntegralResult, InternalInconsistency) as exc:
        print(f"bncalc: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_FAILED

    print(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
