import argparse

from njordan.services.certificates import reduce_certificate, verify_certificate
from njordan.services.persistence import load_certificate

"""
This file is used to re-check a certificate file by recomputation
Exit 0 when valid, 1 when the combination does not give the target, 2 when the file is unreadable
"""


def add_parser(subparsers, parents):
    parser = subparsers.add_parser("verify-cert", parents=parents, help="verify a certificate file")
    parser.add_argument("path", help="certificate JSON file")
    parser.add_argument("--reduce", type=int, metavar="P", help="reduce a Q certificate mod P before checking")
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace) -> int:
    cert = load_certificate(args.path)
    if args.reduce:
        cert = reduce_certificate(cert, args.reduce)
    ok = verify_certificate(cert)
    print(f"{'valid' if ok else 'INVALID'}: {cert.target} ({cert.mode}, {cert.field}, {len(cert.instances)} instances)")
    return 0 if ok else 1
