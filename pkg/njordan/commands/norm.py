import argparse

import numpy as np

from njordan.commands.output import emit
from njordan.config import DEFAULT_SAMPLES
from njordan.services.cstar_num import (
    LinearMapC,
    check_corollary_2_6,
    check_theorem_2_7,
    functional_report,
    step2_batch,
)
from njordan.services.tables import render_corollary, render_functionals, render_step2, render_theorem27

"""
This file is used to run the numeric norm checks on C^m
--map takes rows separated by ';' and entries by ',', e.g. "1,0,0;0,0,1" or "0.5j,0"
"""

CHECKS = ("functionals", "corollary-2.6", "theorem-2.7", "step2")


def parse_map(text: str) -> LinearMapC:
    try:
        rows = [[complex(entry.strip().replace("i", "j")) for entry in row.split(",")] for row in text.split(";")]
    except ValueError:
        raise ValueError(f"Cannot read map {text!r}: expected rows like '1,0;0,1'") from None
    if len({len(row) for row in rows}) != 1:
        raise ValueError(f"Map {text!r} has rows of different lengths")
    return LinearMapC(np.array(rows), name=text)


def injected_map(m: int, k: int) -> LinearMapC:
    """2 times the first coordinate in every component: linear, real, not 3-Jordan."""
    matrix = np.zeros((k, m), dtype=complex)
    matrix[:, 0] = 2
    return LinearMapC(matrix, name="injected 2*a1")


def add_parser(subparsers, parents):
    parser = subparsers.add_parser("norm", parents=parents, help="numeric norm checks on C^m")
    parser.add_argument("check", choices=CHECKS)
    parser.add_argument("--m", type=int, default=3, help="domain dimension")
    parser.add_argument("--k", type=int, default=3, help="codomain dimension (corollary-2.6)")
    parser.add_argument("--n", type=int, default=3, help="Jordan power (functionals, step2)")
    parser.add_argument("--power", type=int, default=1, help="power parameter of theorem-2.7")
    parser.add_argument("--samples", type=int, default=DEFAULT_SAMPLES)
    parser.add_argument("--map", dest="map_text", help="map matrix for theorem-2.7 (default: identity on C^m)")
    parser.add_argument("--inject", action="store_true", help="add a non-Jordan map that the filter must reject")
    parser.add_argument("--count", type=int, default=1000, help="number of random maps (step2)")
    parser.add_argument("--json", metavar="PATH", help="write the report as JSON ('-' for stdout)")
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace) -> int:
    if args.samples < 1:
        raise ValueError(f"--samples must be positive, got {args.samples}")

    if args.check == "functionals":
        report = functional_report(args.m, args.n)
        emit(report, render_functionals(report), args.json)
        return 0

    elif args.check == "corollary-2.6":
        extra = [injected_map(args.m, args.k)] if args.inject else []
        report = check_corollary_2_6(args.m, args.k, args.samples, args.seed, extra, args.unsafe_override)
        emit(report, render_corollary(report), args.json)
        if args.inject and not any(r.map == extra[0].label() for r in report.rejected):
            return 1
        return 0

    elif args.check == "theorem-2.7":
        h = parse_map(args.map_text) if args.map_text else LinearMapC(np.eye(args.m), name=f"id on C^{args.m}")
        report = check_theorem_2_7(h, args.power, args.samples, args.seed)
        emit(report, render_theorem27(report), args.json)
        return 0

    else:
        report = step2_batch(args.count, args.n, args.samples, args.seed)
        emit(report, render_step2(report), args.json)
        return 0 if report.agreed == report.maps else 1
