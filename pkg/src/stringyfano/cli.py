"""Command line interface.

    stringyfano classify --input polys.txt
    stringyfano estr --input polys.txt --format text
    stringyfano batch --input db.txt --checks classify,id24 --jobs 8

Every subcommand reads one or more polytope blocks (see :mod:`stringyfano.io`)
and exits with status 0 iff no check failed. Skipped checks (polytopes
outside a check's domain) do not count as failures.
"""

from __future__ import annotations

import argparse
import sys

from .batch import CHECKS, CheckResult, parse_checks, run_batch, run_check
from .errors import EmptyCheckSet, ParseError
from .io import emit_report, parse_polytopes

STRATEGY_NAMES = {"vertices": "vertices_only", "boundary": "all_boundary_points"}

# subcommand -> batch check name
SINGLE_CHECKS = {"classify": "classify", "check24": "id24", "check-lw": "lw", "check-cy": "cy"}


def _read_input(path: str) -> bytes:
    if path == "-":
        return sys.stdin.buffer.read()
    with open(path, "rb") as fh:
        return fh.read()


def _write_output(data: bytes, path: str | None) -> None:
    if path is None or path == "-":
        sys.stdout.buffer.write(data)
        sys.stdout.flush()
    else:
        with open(path, "wb") as fh:
            fh.write(data)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="stringyfano",
        description="Stringy E-functions and combinatorial identities for canonical toric Fano polytopes.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", default="-", metavar="PATH",
                        help="polytope file ('-' for stdin, the default)")
    common.add_argument("--output", default=None, metavar="PATH", help="write the report here instead of stdout")
    common.add_argument("--format", choices=("json", "csv", "text"), default="json")
    common.add_argument("--strategy", choices=tuple(STRATEGY_NAMES), default="boundary",
                        help="simplicial subdivision used by the general E-function algorithm")
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("classify", parents=[common], help="canonical / reflexive / almost reflexive flags")
    estr = sub.add_parser("estr", parents=[common], help="stringy E-function of each polytope")
    estr.add_argument("--method", choices=("auto", "general"), default="auto",
                      help="auto: closed form (d = 3) or LDP formula (d = 2); general: "
                           "subdivision algorithm, compared against the closed form")
    sub.add_parser("check24", parents=[common], help="the 24 identity (d = 3)")
    sub.add_parser("check-lw", parents=[common], help="stringy Libgober-Wood identity (d = 2, 3)")
    sub.add_parser("check-cy", parents=[common], help="Calabi-Yau stringy Euler number by two routes")

    batch = sub.add_parser("batch", parents=[common], help="run several checks over a polytope file")
    batch.add_argument("--checks", default="classify,id24", metavar="LIST",
                       help="comma separated subset of " + ",".join(CHECKS))
    batch.add_argument("--jobs", type=int, default=1, metavar="N", help="worker processes")
    batch.add_argument("--all-results", action="store_true",
                       help="include every per-check result in JSON output, not only failures")
    return parser


def _estr_check(method: str, dim: int) -> str:
    if method == "general":
        return "e_general"
    return "e3d" if dim == 3 else "e_ldp"


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    strategy = STRATEGY_NAMES[args.strategy]
    try:
        records = parse_polytopes(_read_input(args.input))
    except ParseError as exc:
        print(f"stringyfano: parse error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"stringyfano: {exc}", file=sys.stderr)
        return 2

    if args.command == "batch":
        if args.jobs < 1:
            parser.error("--jobs must be a positive integer")
        try:
            checks = parse_checks(args.checks)
        except (EmptyCheckSet, ValueError) as exc:
            parser.error(str(exc))
        summary = run_batch(records, checks, args.jobs, strategy)
        _write_output(emit_report(summary, args.format, args.all_results), args.output)
        return 0 if summary.failure_count == 0 else 1

    results = []
    for rec in records:
        if args.command == "estr":
            check = _estr_check(args.method, rec.polytope.dim)
        else:
            check = SINGLE_CHECKS[args.command]
        status, details = run_check(check, rec.polytope, strategy)
        results.append(CheckResult(rec.index, rec.label, check, status, details))
    _write_output(emit_report(results, args.format), args.output)
    return 0 if all(r.status != "fail" for r in results) else 1
