import argparse

import pandas as pd

from njordan.commands.output import emit
from njordan.services.derivation import replay
from njordan.services.scripts import SCRIPT_MAP, get_script
from njordan.services.tables import render_trace

"""
This file is used to replay the builtin derivation scripts
Exit 0 when every assertion of the script holds, 1 otherwise
"""


def add_parser(subparsers, parents):
    parser = subparsers.add_parser("replay", parents=parents, help="replay a builtin derivation script")
    parser.add_argument("--script", help=f"one of: {', '.join(SCRIPT_MAP)}")
    parser.add_argument("--list", action="store_true", help="list the builtin scripts")
    parser.add_argument("--json", metavar="PATH", help="write the trace as JSON ('-' for stdout)")
    parser.add_argument("--timings", action="store_true", help="include wall time in the trace")
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace) -> int:
    if args.list:
        rows = [{"script": s.name, "mode": s.mode.value, "description": s.description} for s in SCRIPT_MAP.values()]
        print(pd.DataFrame(rows).to_string(index=False))
        return 0
    if not args.script:
        raise ValueError("replay needs --script NAME or --list")

    trace = replay(get_script(args.script), timings=args.timings)
    emit(trace, render_trace(trace), args.json)
    return 0 if trace.passed else 1
