"""
Decide whether a target identity is a linear consequence of substitution instances of seed(n).

Coordinates are the (lhs word | rhs monomial) pairs of all identities involved, lhs words first,
each block in graded-lex order. Elimination is exact (see services/linalg.py).
"""

import itertools
import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm

from njordan.config import COEFF_RANGE_CAP, INSTANCE_VARS_CAP
from njordan.errors import DenominatorError, GuardError, ModeMismatchError
from njordan.freealg import SEED_VARIABLE, FreePoly, Mode, SubstitutionSpec, format_poly
from njordan.freealg.poly import word_key
from njordan.schema.certificate import Certificate, CertificateInstance
from njordan.services.identities import HIdentity, format_identity, seed, substitute
from njordan.services.linalg import Field, IncrementalEchelon

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Instance:
    subst: SubstitutionSpec
    identity: HIdentity
    source: str = "seed"


@dataclass
class SpanResult:
    coefficients: list[Fraction] | None
    rank: int
    residual: HIdentity


@dataclass
class ConsequenceResult:
    in_span: bool
    rank: int
    instance_count: int
    certificate: Certificate | None = None
    residual: str | None = None
    symmetry_obstruction: str | None = None
    notes: list[str] = field(default_factory=list)

    @property
    def verdict(self) -> str:
        return "InSpan" if self.in_span else "NotInSpan"


## Instance generation

def _check_guard(variables, coeff_range: int, unsafe_override: bool):
    if not variables:
        raise ValueError("At least one instance variable is needed")
    if coeff_range < 1:
        raise ValueError(f"Coefficient range must be at least 1, got {coeff_range}")
    if unsafe_override:
        return
    if len(variables) > INSTANCE_VARS_CAP:
        raise GuardError(f"{len(variables)} instance variables exceed the guard {INSTANCE_VARS_CAP}")
    if coeff_range > COEFF_RANGE_CAP:
        raise GuardError(f"Coefficient range {coeff_range} exceeds the guard {COEFF_RANGE_CAP}")


def coefficient_vectors(k: int, coeff_range: int) -> list[tuple[int, ...]]:
    """Nonzero vectors in {-c..c}^k, one per {e, -e} pair (the lexicographically smaller one)."""
    vectors = []
    for eps in itertools.product(range(-coeff_range, coeff_range + 1), repeat=k):
        neg = tuple(-e for e in eps)
        if any(eps) and eps < neg:
            vectors.append(eps)
    return vectors


def _seed_instance(base: HIdentity, variables: tuple[int, ...], eps: tuple[int, ...]) -> Instance:
    sigma = SubstitutionSpec.of({SEED_VARIABLE: {v: e for v, e in zip(variables, eps) if e}})
    return Instance(sigma, substitute(base, sigma))


def seed_instances(
    n: int,
    variables,
    coeff_range: int,
    mode: Mode | str = Mode.NONCOMMUTATIVE,
    threads: int = 1,
    unsafe_override: bool = False,
) -> list[Instance]:
    variables = tuple(variables)
    _check_guard(variables, coeff_range, unsafe_override)
    base = seed(n, mode)
    vectors = coefficient_vectors(len(variables), coeff_range)
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            expanded = list(pool.map(lambda eps: _seed_instance(base, variables, eps), vectors))
    else:
        expanded = [_seed_instance(base, variables, eps) for eps in vectors]

    seen = set()
    instances = []
    for inst in expanded:
        key = (inst.identity.lhs, inst.identity.rhs)
        flipped = (-inst.identity.lhs, -inst.identity.rhs)
        if key in seen or flipped in seen:
            continue
        seen.add(key)
        instances.append(inst)
    logger.debug("seed(%d) gave %d instances over %d vectors", n, len(instances), len(vectors))
    return instances


def generate_instances(
    n: int,
    variables,
    coeff_range: int,
    mode: Mode | str = Mode.NONCOMMUTATIVE,
    unsafe_override: bool = False,
) -> list[HIdentity]:
    return [inst.identity for inst in seed_instances(n, variables, coeff_range, mode, unsafe_override=unsafe_override)]


def premise_instances(premise: HIdentity, variables, index: int) -> list[Instance]:
    """Every variable map (collapses allowed) of a premise into the instance variables."""
    own = premise.variables()
    instances = []
    seen = set()
    for images in itertools.product(tuple(variables), repeat=len(own)):
        sigma = SubstitutionSpec.of({v: {u: 1} for v, u in zip(own, images)})
        identity = substitute(premise, sigma)
        key = (identity.lhs, identity.rhs)
        if identity.is_trivial() or key in seen:
            continue
        seen.add(key)
        instances.append(Instance(sigma, identity, f"premise:{index}"))
    return instances


def permutation_instances(identity: HIdentity) -> list[HIdentity]:
    own = identity.variables()
    out = []
    seen = set()
    for perm in itertools.permutations(own):
        relabelled = substitute(identity, {v: {u: 1} for v, u in zip(own, perm)})
        key = (relabelled.lhs, relabelled.rhs)
        if key not in seen:
            seen.add(key)
            out.append(relabelled)
    return out


## Span membership

def _columns(identities: list[HIdentity]) -> dict[tuple[str, tuple], int]:
    left = sorted({w for ident in identities for w in ident.lhs.words()}, key=word_key)
    right = sorted({w for ident in identities for w in ident.rhs.words()}, key=word_key)
    keys = [("L", w) for w in left] + [("R", w) for w in right]
    return {key: i for i, key in enumerate(keys)}


def _vector(identity: HIdentity, columns, fld: Field) -> tuple[dict[int, int], int]:
    entries = {columns[("L", w)]: c for w, c in identity.lhs.terms}
    entries.update({columns[("R", w)]: c for w, c in identity.rhs.terms})
    if fld.is_rational:
        scale = lcm(*(c.denominator for c in entries.values())) if entries else 1
        return {k: int(c * scale) for k, c in entries.items()}, scale
    try:
        vector = {k: fld.reduce(c) for k, c in entries.items()}
    except ZeroDivisionError as exc:
        raise DenominatorError(f"{format_identity(identity)}: {exc}") from None
    return {k: v for k, v in vector.items() if v}, 1


def _from_vector(residual: dict[int, Fraction], columns, mode: Mode) -> HIdentity:
    by_index = {i: key for key, i in columns.items()}
    lhs = {by_index[i][1]: c for i, c in residual.items() if by_index[i][0] == "L"}
    rhs = {by_index[i][1]: c for i, c in residual.items() if by_index[i][0] == "R"}
    return HIdentity(FreePoly.from_dict(lhs, mode), FreePoly.from_dict(rhs, Mode.COMMUTATIVE))


def solve_span(generators: list[HIdentity], target: HIdentity, fld: Field = Field()) -> SpanResult:
    """Coefficients c_i with sum c_i * generators[i] == target, if they exist."""
    for g in generators:
        if g.mode != target.mode:
            raise ModeMismatchError(f"Generator in {g.mode.value} mode, target in {target.mode.value} mode")
    columns = _columns(generators + [target])
    echelon = IncrementalEchelon(fld)
    for i, g in enumerate(generators):
        vector, scale = _vector(g, columns, fld)
        echelon.insert(vector, {i: scale})
    vector, scale = _vector(target, columns, fld)
    coeffs, residual = echelon.express(vector, scale)
    residual_identity = _from_vector(residual, columns, target.mode)
    if coeffs is None:
        return SpanResult(None, echelon.rank, residual_identity)
    return SpanResult([coeffs.get(i, Fraction(0)) for i in range(len(generators))], echelon.rank, residual_identity)


def symmetry_obstruction(target: HIdentity) -> str | None:
    """Two words of equal content with different lhs coefficients, if any (noncommutative mode only)."""
    if target.mode != Mode.NONCOMMUTATIVE:
        return None
    done = set()
    for word in target.lhs.words():
        content = tuple(sorted(word))
        if content in done:
            continue
        done.add(content)
        arrangements = sorted(set(itertools.permutations(content)))
        coeffs = [(w, target.lhs.coeff(w)) for w in arrangements]
        first_word, first_coeff = coeffs[0]
        for w, c in coeffs[1:]:
            if c != first_coeff:
                return (
                    f"coefficient of {format_poly(FreePoly.monomial(first_word))} is {first_coeff} but "
                    f"coefficient of {format_poly(FreePoly.monomial(w))} is {c}; every seed instance "
                    f"is constant on words of equal content"
                )
    return None


def _format_coeff(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def consequence_check(
    n: int,
    target: HIdentity,
    variables,
    coeff_range: int,
    field: Field | str = "Q",
    premises: list[HIdentity] | None = None,
    threads: int = 1,
    unsafe_override: bool = False,
) -> ConsequenceResult:
    fld = field if isinstance(field, Field) else Field.parse(field)
    premises = premises or []
    if not target.is_homogeneous(n):
        raise ValueError(f"Target {format_identity(target)} is not homogeneous of degree {n}")
    for p in premises:
        if p.mode != target.mode:
            raise ModeMismatchError(f"Premise {format_identity(p)} is not in {target.mode.value} mode")
        if fld.prime in p.denominators:
            raise DenominatorError(f"Premise {format_identity(p)} divides by {fld.prime}, which is zero in {fld.tag}")

    pool = seed_instances(n, variables, coeff_range, target.mode, threads, unsafe_override)
    for i, premise in enumerate(premises):
        pool.extend(premise_instances(premise, variables, i))
    logger.info("checking %s against %d instances over %s", format_identity(target), len(pool), fld.tag)

    result = solve_span([inst.identity for inst in pool], target, fld)
    if result.coefficients is None:
        obstruction = None if premises else symmetry_obstruction(target)
        return ConsequenceResult(
            in_span=False,
            rank=result.rank,
            instance_count=len(pool),
            residual=format_identity(result.residual),
            symmetry_obstruction=obstruction,
        )

    chosen = [(inst, c) for inst, c in zip(pool, result.coefficients) if c != 0]
    certificate = Certificate(
        n=n,
        mode=target.mode.value,
        field=fld.tag,
        target=format_identity(target),
        instances=[
            CertificateInstance(subst=inst.subst.to_text(), coeff=_format_coeff(c), source=inst.source)
            for inst, c in chosen
        ],
        premises=[format_identity(p) for p in premises],
    )
    return ConsequenceResult(in_span=True, rank=result.rank, instance_count=len(pool), certificate=certificate)

