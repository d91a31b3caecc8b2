import argparse
import logging
import sys

from njordan import config
from njordan.commands import COMMANDS
from njordan.errors import NJordanError

"""
This file is used to wire every sub-command into one command line
Exit codes: 0 verified, 1 a check failed or a target is not in the span, 2 usage, guard or input error
"""

logger = logging.getLogger("njordan")


def common_parser() -> argparse.ArgumentParser:
    parent = argparse.ArgumentParser(add_help=False)
    parent.add_argument("--threads", type=int, default=config.THREADS, help="worker threads (env NJORDAN_THREADS)")
    parent.add_argument("--seed", type=int, default=config.DEFAULT_SEED, help="seed for every sampled path")
    parent.add_argument("--unsafe-override", action="store_true", help="lift the desk-scale guards")
    parent.add_argument("-v", "--verbose", action="store_true", help="debug logging on stderr")
    return parent


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="njordan",
        description="Exact and finite-model checks for n-Jordan homomorphisms",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)
    parents = [common_parser()]
    for command in COMMANDS:
        command.add_parser(subparsers, parents)
    return parser


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 2

    config.configure_logging(args.verbose)
    if args.threads < 1:
        logger.error("--threads must be at least 1, got %d", args.threads)
        return 2

    try:
        return args.handler(args)
    except NJordanError as exc:
        logger.error("%s: %s", type(exc).__name__, exc.detail)
        return exc.exit_code
    except (ValueError, OSError) as exc:
        logger.error("%s", exc)
        return 2
    except Exception:
        logger.exception("unexpected failure")
        return 2


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
