"""Command-line front end: ``crosscap``, ``candidates``, ``xfun`` and ``verify``.

Exit codes: 0 success, 1 verification failed, 2 bad input.
"""
from __future__ import annotations

import argparse
import csv
import json
import re
import sys
from typing import List, Optional, Sequence

from . import report
from .analysis import verify_bound
from .candidates import (
    DEFAULT_MAX_VERTICAL,
    basic_system,
    enumerate_type_ii,
    enumerate_type_iii,
    solve_type_i,
)
from .core import format_fraction
from .edgepath import big_x
from .knot import InvalidKnotError, PretzelKnot, parse_pretzel
from .plot import render_svg

EXIT_OK, EXIT_FAILED, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    def __init__(self, condition: str, message: str):
        super().__init__(message)
        self.condition = condition


def _join_pretzel_values(argv: Sequence[str]) -> List[str]:
    # "-p -3,5,5" would otherwise be read as an unknown option "-3,5,5"
    out = []
    for i, arg in enumerate(argv):
        if i and argv[i - 1] in ("-p", "--pretzel") and re.fullmatch(r"-\d.*", arg):
            out[-1] = f"{argv[i - 1]}={arg}"
        else:
            out.append(arg)
    return out


def _non_negative(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("must be a non-negative integer")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="crosscap",
        description="Exact edgepath computations for crosscap numbers of pretzel knots.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("-p", "--pretzel", required=True, help="tangle parameters, e.g. -3,5,5")
        p.add_argument("--json", action="store_true", help="JSON output (the default)")
        return p

    add("crosscap", "crosscap number and reference surface statistics")
    for name, text in (("candidates", "full candidate table"), ("verify", "check the lower bound")):
        add(name, text).add_argument(
            "--max-vertical", type=_non_negative, default=DEFAULT_MAX_VERTICAL,
            help=f"vertical edge budget for type II systems (default {DEFAULT_MAX_VERTICAL})",
        )
    x = add("xfun", "the function X of one basic system")
    x.add_argument("--system", help="one letter a/b per tangle (default all a)")
    x.add_argument("--csv", metavar="PATH", help="write the pieces as CSV")
    x.add_argument("--svg", metavar="PATH", help="write a plot of the graph")
    return parser


def _knot(text: str, min_n: int = 1) -> PretzelKnot:
    try:
        K = parse_pretzel(text)
    except InvalidKnotError as exc:
        raise InputError(exc.condition, str(exc)) from None
    if K.N < min_n:
        raise InputError("N<3", f"{K} has {K.N} tangles; this command needs at least {min_n}")
    return K


def _selector(K: PretzelKnot, text: Optional[str]) -> str:
    source = "a" * K.N if text is None else text.strip().lower()
    if len(source) != K.N or set(source) - {"a", "b"}:
        raise InputError("selector", f"system selector must be {K.N} letters from a/b, got {text!r}")
    return source


def _write_csv(path: str, f) -> None:
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["lo", "hi", "slope", "intercept"])
        for lo, hi, m, c in f.pieces():
            writer.writerow([format_fraction(lo), "" if hi is None else format_fraction(hi),
                             format_fraction(m), format_fraction(c)])


def run(args: argparse.Namespace) -> tuple:
    """Execute one parsed command; return ``(document, exit_code)``."""
    if args.command == "crosscap":
        K = _knot(args.pretzel)
        return report.document("crosscap", K, report.crosscap_results(K)), EXIT_OK
    K = _knot(args.pretzel, 3)
    if args.command == "candidates":
        results = report.candidates_results(
            K, solve_type_i(K), enumerate_type_ii(K, args.max_vertical),
            enumerate_type_iii(K), args.max_vertical,
        )
        return report.document("candidates", K, results), EXIT_OK
    if args.command == "xfun":
        source = _selector(K, args.system)
        f = big_x(basic_system(K, source))
        if args.csv:
            _write_csv(args.csv, f)
        if args.svg:
            with open(args.svg, "w") as fh:
                fh.write(render_svg(f, f"X for {K}, system {source}"))
        return report.document("xfun", K, report.xfun_results(source, f)), EXIT_OK
    r = verify_bound(K, args.max_vertical)
    return report.document("verify", K, report.verify_results(r)), EXIT_OK if r.verdict else EXIT_FAILED


def main(argv: Optional[Sequence[str]] = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(_join_pretzel_values(argv))
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        doc, code = run(args)
    except InputError as exc:
        print(f"crosscap: error [{exc.condition}]: {exc}", file=sys.stderr)
        return EXIT_INPUT
    sys.stdout.write(json.dumps(doc) + "\n")
    return code
