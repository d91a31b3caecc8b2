import argparse
import logging

from njordan.commands.output import emit
from njordan.freealg import Mode, var_ids
from njordan.schema.reports import ConsequenceReport
from njordan.services.certificates import verify_certificate
from njordan.services.consequence import consequence_check
from njordan.services.identities import format_identity, parse_identity
from njordan.services.persistence import save_certificate

"""
This file is used to decide whether a target identity follows linearly from the seed h(a^n) = h(a)^n
Exit 0 with a verified certificate file when it does, 1 when it does not
"""

logger = logging.getLogger(__name__)


def add_parser(subparsers, parents):
    parser = subparsers.add_parser("consequence", parents=parents, help="exact span membership with certificate")
    parser.add_argument("--n", type=int, required=True, help="seed exponent")
    parser.add_argument("--vars", default="x,y,z", help="instance variables, comma separated")
    parser.add_argument("--coeff-range", type=int, default=1, help="substitution coefficients range over -c..c")
    parser.add_argument("--target", required=True, help='e.g. "h(x*y*z)=H(x)*H(y)*H(z)"')
    parser.add_argument("--mode", choices=[m.value for m in Mode], default=Mode.COMMUTATIVE.value,
                        help="domain mode: c (commutative) or nc (noncommutative)")
    parser.add_argument("--field", default="Q", help="Q or GF(p)")
    parser.add_argument("--premise", action="append", default=[], help="extra identity to instantiate (repeatable)")
    parser.add_argument("--cert", default="certificate.json", metavar="PATH", help="where to write the certificate")
    parser.add_argument("--json", metavar="PATH", help="write the report as JSON ('-' for stdout)")
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace) -> int:
    mode = Mode(args.mode)
    target = parse_identity(args.target, mode)
    premises = [parse_identity(text, mode) for text in args.premise]
    result = consequence_check(
        args.n,
        target,
        var_ids(args.vars),
        args.coeff_range,
        field=args.field,
        premises=premises,
        threads=args.threads,
        unsafe_override=args.unsafe_override,
    )

    report = ConsequenceReport(
        verdict=result.verdict,
        n=args.n,
        mode=mode.value,
        field=args.field,
        target=format_identity(target),
        instances=result.instance_count,
        rank=result.rank,
        residual=result.residual,
        symmetry_obstruction=result.symmetry_obstruction,
    )
    code = 1
    if result.in_span:
        if verify_certificate(result.certificate, target):
            save_certificate(result.certificate, args.cert)
            report.certificate_path = args.cert
            code = 0
        else:
            logger.error("the solver's certificate does not re-verify")

    lines = [f"{report.verdict}: {report.target} ({report.mode}, {report.field})",
             f"rank {report.rank} over {report.instances} instances"]
    if report.certificate_path:
        lines.append(f"certificate with {len(result.certificate.instances)} instances written to {report.certificate_path}")
    if report.residual:
        lines.append(f"residual: {report.residual}")
    if report.symmetry_obstruction:
        lines.append(f"obstruction: {report.symmetry_obstruction}")
    emit(report, "\n".join(lines), args.json)
    return code
