import argparse

from njordan.commands.output import emit
from njordan.models.worked_examples import (
    commutative_jordan_example,
    function_ring_example,
    negation_example,
    nilpotent_example,
    reproduce_examples,
    theorem_2_2_example,
    transpose_example,
)
from njordan.schema.reports import ExamplesReport
from njordan.services.tables import render_examples

"""
This file is used to reproduce the introductory examples on their finite surrogates
"""

EXAMPLE_MAP = {
    "negation": lambda seed_value: negation_example(),
    "nilpotent": lambda seed_value: nilpotent_example(seed_value=seed_value),
    "functions": lambda seed_value: function_ring_example(),
    "commutative": lambda seed_value: commutative_jordan_example(),
    "transpose": lambda seed_value: transpose_example(),
    "theorem-2.2": lambda seed_value: theorem_2_2_example(),
}


def add_parser(subparsers, parents):
    parser = subparsers.add_parser("examples", parents=parents, help="reproduce the introductory examples")
    group = parser.add_mutually_exclusive_group(required=True)
    group.add_argument("--all", action="store_true", help="run every example")
    group.add_argument("--only", choices=list(EXAMPLE_MAP), action="append", help="run one example (repeatable)")
    parser.add_argument("--json", metavar="PATH", help="write the report as JSON ('-' for stdout)")
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace) -> int:
    if args.all:
        report = reproduce_examples(args.seed)
    else:
        sections = [EXAMPLE_MAP[name](args.seed) for name in args.only]
        report = ExamplesReport(passed=all(s.passed for s in sections), seed=args.seed, sections=sections)
    emit(report, render_examples(report), args.json)
    return 0 if report.passed else 1
