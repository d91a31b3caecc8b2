import argparse
import logging

from njordan.commands.output import emit
from njordan.models import get_ring
from njordan.models.predicates import predicate_report
from njordan.models.search import PREDICATES, implication_check, search
from njordan.schema.reports import SearchReport
from njordan.services.tables import render_implication, render_search

"""
This file is used to search the additive maps between two catalog rings
--expect-none turns the search into a check: any hit exits 1
--implication counts n-Jordan maps that are not n-ring over the whole enumeration
"""

logger = logging.getLogger(__name__)


def add_parser(subparsers, parents):
    parser = subparsers.add_parser("search", parents=parents, help="search additive maps of finite rings")
    parser.add_argument("--domain", required=True, help="ring name, e.g. zm:5^2, mat:2x2@2, upper:4@2")
    parser.add_argument("--codomain", help="ring name (default: the domain)")
    parser.add_argument("--n", type=int, required=True, help="power of the Jordan / ring predicate")
    parser.add_argument("--predicate", choices=PREDICATES, default="jordan_not_ring")
    parser.add_argument("--limit", type=int, default=10, help="stop after this many hits")
    parser.add_argument("--sample", type=int, help="check this many seeded random maps instead of all")
    parser.add_argument("--expect-none", action="store_true", help="exit 1 when a map is found")
    parser.add_argument("--implication", action="store_true", help="count n-Jordan maps that are not n-ring")
    parser.add_argument("--json", metavar="PATH", help="write the report as JSON ('-' for stdout)")
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace) -> int:
    if args.n < 2:
        raise ValueError(f"--n must be at least 2, got {args.n}")
    domain = get_ring(args.domain, args.unsafe_override)
    codomain = get_ring(args.codomain, args.unsafe_override) if args.codomain else domain

    if args.implication:
        report = implication_check(domain, codomain, args.n, args.unsafe_override)
        emit(report, render_implication(report), args.json)
        return 1 if report.counterexamples else 0

    found = search(
        domain,
        codomain,
        args.n,
        args.predicate,
        limit=args.limit,
        threads=args.threads,
        sample=args.sample,
        seed_value=args.seed,
        unsafe_override=args.unsafe_override,
    )
    powers = tuple(sorted({2, 3, 4, args.n}))
    report = SearchReport(
        domain=domain.name,
        codomain=codomain.name,
        n=args.n,
        predicate=args.predicate,
        mode="sampled" if args.sample else "exhaustive",
        seed=args.seed if args.sample else None,
        found=[predicate_report(h, jordan_powers=powers, ring_powers=tuple(sorted({2, 3, args.n}))) for h in found],
    )
    emit(report, render_search(report), args.json)
    if args.expect_none and found:
        logger.warning("expected no %s map, found %d", args.predicate, len(found))
        return 1
    return 0
