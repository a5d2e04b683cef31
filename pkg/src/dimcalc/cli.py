"""Command line interface: ``dimcalc analyze|check|rank|convert``."""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import __version__
from .dsl import check_equation, parse_problem
from .errors import DimcalcError
from .report import build_report, check_report, emit_json, format_check, format_text
from .units import convert, format_unit_expr, load_units, parse_unit_expr

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_FINDING = 2  # no dimensional model, or an inhomogeneous equation


def _load_problem(path: str):
    return parse_problem(Path(path).read_text(encoding="utf-8"))


def cmd_analyze(args, out) -> int:
    problem = _load_problem(args.problem)
    report = build_report(problem)
    if args.json:
        out.write(emit_json(report).decode("utf-8"))
    else:
        out.write(format_text(problem))
    return EXIT_OK if report["models"] else EXIT_FINDING


def cmd_check(args, out) -> int:
    problem = _load_problem(args.problem)
    result = check_equation(problem, args.eq)
    if args.json:
        out.write(json.dumps(check_report(problem, result), indent=2, default=str) + "\n")
    else:
        out.write(format_check(problem, result))
    return EXIT_OK if result.homogeneous else EXIT_FINDING


def cmd_rank(args, out) -> int:
    problem = _load_problem(args.problem)
    out.write(f"{problem.matrix().rank}\n")
    return EXIT_OK


def cmd_convert(args, out) -> int:
    reg = load_units(args.units)
    q = reg.parse(args.literal)
    target = parse_unit_expr(args.to)
    value = convert(reg, q, target)
    out.write(f"{value} {format_unit_expr(target)}  (~{float(value):.12g})\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="dimcalc", description="Exact dimensional analysis.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="enumerate dimensional models and Pi relations")
    p.add_argument("problem")
    p.add_argument("--json", action="store_true", help="emit the canonical JSON report")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("check", help="check an equation for dimensional homogeneity")
    p.add_argument("problem")
    p.add_argument("--eq", required=True, help='equation, e.g. "t^2 = l/g"')
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("rank", help="rank of the dimensional matrix")
    p.add_argument("problem")
    p.set_defaults(func=cmd_rank)

    p = sub.add_parser("convert", help="convert a quantity literal to another unit")
    p.add_argument("--units", required=True, help="units file")
    p.add_argument("literal", help='quantity literal, e.g. "200 cm"')
    p.add_argument("--to", required=True, help="target unit expression")
    p.set_defaults(func=cmd_convert)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, sys.stdout)
    except (DimcalcError, OSError) as exc:
        print(f"dimcalc: error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
