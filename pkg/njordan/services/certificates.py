"""
Independent re-checking of certificates.

Verification rebuilds every instance from the seed (or a listed premise) with the identities module
and compares the combination with the target. Nothing here touches the elimination code.
"""

import logging
from fractions import Fraction

from njordan.errors import CertificateFormatError, DenominatorError
from njordan.freealg import FreePoly, Mode, SubstitutionSpec
from njordan.schema.certificate import Certificate
from njordan.services.identities import HIdentity, combine, parse_identity, seed, substitute, trivial
from njordan.services.linalg import Field

logger = logging.getLogger(__name__)


def _base_identity(cert: Certificate, source: str, mode: Mode) -> HIdentity:
    if source == "seed":
        return seed(cert.n, mode)
    index = int(source.split(":", 1)[1])
    if index >= len(cert.premises):
        raise CertificateFormatError(f"Instance refers to premise {index}, only {len(cert.premises)} listed")
    return parse_identity(cert.premises[index], mode)


def _parse_coeff(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise CertificateFormatError(f"Coefficient {text!r} is not a rational 'p/q'") from None


def certificate_combination(cert: Certificate) -> HIdentity:
    mode = Mode(cert.mode)
    terms = []
    for inst in cert.instances:
        base = _base_identity(cert, inst.source, mode)
        terms.append((_parse_coeff(inst.coeff), substitute(base, SubstitutionSpec.of(inst.subst))))
    return combine(terms) if terms else trivial(mode)


def _vanishes(p: FreePoly, fld: Field) -> bool:
    if fld.is_rational:
        return p.is_zero()
    try:
        return all(fld.reduce(c) == 0 for _, c in p.terms)
    except ZeroDivisionError:
        return False


def verify_certificate(cert: Certificate, target: HIdentity | None = None) -> bool:
    mode = Mode(cert.mode)
    fld = Field.parse(cert.field)
    if target is None:
        target = parse_identity(cert.target, mode)
    if target.mode != mode:
        logger.warning("certificate is in %s mode, target in %s mode", mode.value, target.mode.value)
        return False
    combined = certificate_combination(cert)
    ok = _vanishes(combined.lhs - target.lhs, fld) and _vanishes(combined.rhs - target.rhs, fld)
    if not ok:
        logger.info("certificate combination %s does not match target %s", combined, target)
    return ok


def reduce_certificate(cert: Certificate, p: int) -> Certificate:
    """Map a certificate over Q to GF(p); fails when a coefficient denominator is divisible by p."""
    fld = Field.parse(f"GF({p})")
    if cert.field != "Q":
        raise CertificateFormatError(f"Only certificates over Q can be reduced, got {cert.field}")
    instances = []
    for inst in cert.instances:
        c = _parse_coeff(inst.coeff)
        try:
            reduced = fld.reduce(c)
        except ZeroDivisionError:
            raise DenominatorError(f"Coefficient {inst.coeff} has no image in GF({p})") from None
        instances.append(inst.model_copy(update={"coeff": str(reduced)}))
    return cert.model_copy(update={"field": fld.tag, "instances": instances})
