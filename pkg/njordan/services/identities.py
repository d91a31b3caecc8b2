"""
The h-identity calculus.

An HIdentity "h(L) = R" reads: for every additive h from the domain ring into a commutative ring in
which the tracked primes are invertible, and which satisfies every tracked premise, the sum
sum c_w * h(w(x, y, ...)) equals R evaluated at H_v = h(v). Identities are closed under integer-linear
substitution (h is additive) and under rational linear combination (primes of the denominators
are recorded).
"""

import logging
from dataclasses import dataclass, field, replace
from fractions import Fraction
from math import gcd
from typing import Iterable, Mapping

import numpy as np
from sympy import primefactors

from njordan.config import ASSIGNMENT_CAP
from njordan.errors import DenominatorError, GuardError, ModelError, ModeMismatchError
from njordan.freealg import (
    SEED_VARIABLE,
    FreePoly,
    Mode,
    SubstitutionSpec,
    format_poly,
    parse_identity_parts,
    substitute_linear,
    var_name,
)
from njordan.freealg.parser import RHS_HEAD
from njordan.models.ring import AdditiveMap

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class HIdentity:
    lhs: FreePoly
    rhs: FreePoly
    denominators: frozenset[int] = field(default_factory=frozenset)
    premises: frozenset[str] = field(default_factory=frozenset)

    def __post_init__(self):
        if self.rhs.mode != Mode.COMMUTATIVE:
            raise ModeMismatchError("Right-hand sides live in the commutative codomain")

    @property
    def mode(self) -> Mode:
        return self.lhs.mode

    def variables(self) -> tuple[int, ...]:
        return tuple(sorted(set(self.lhs.variables()) | set(self.rhs.variables())))

    def is_trivial(self) -> bool:
        return self.lhs.is_zero() and self.rhs.is_zero()

    def is_homogeneous(self, degree: int) -> bool:
        return self.lhs.is_homogeneous(degree) and self.rhs.is_homogeneous(degree)

    def same_statement(self, other: "HIdentity") -> bool:
        """Canonical equality of both sides, ignoring provenance."""
        return self.lhs == other.lhs and self.rhs == other.rhs

    def __str__(self):
        return format_identity(self)


## Construction

def seed(n: int, mode: Mode | str = Mode.NONCOMMUTATIVE) -> HIdentity:
    if n < 2:
        raise ValueError(f"Seed exponent must be at least 2, got {n}")
    word = (SEED_VARIABLE,) * n
    return HIdentity(FreePoly.monomial(word, 1, Mode(mode)), FreePoly.monomial(word, 1, Mode.COMMUTATIVE))


def trivial(mode: Mode | str = Mode.NONCOMMUTATIVE) -> HIdentity:
    return HIdentity(FreePoly.zero(Mode(mode)), FreePoly.zero(Mode.COMMUTATIVE))


def substitute(identity: HIdentity, sigma: SubstitutionSpec | Mapping) -> HIdentity:
    sigma = SubstitutionSpec.of(sigma)
    return replace(
        identity,
        lhs=substitute_linear(identity.lhs, sigma),
        rhs=substitute_linear(identity.rhs, sigma),
    )


def combine(terms: Iterable[tuple[Fraction | int, HIdentity]]) -> HIdentity:
    terms = list(terms)
    if not terms:
        raise ValueError("combine needs at least one term")
    mode = terms[0][1].mode
    lhs = FreePoly.zero(mode)
    rhs = FreePoly.zero(Mode.COMMUTATIVE)
    denominators: set[int] = set()
    premises: set[str] = set()
    for coeff, identity in terms:
        if identity.mode != mode:
            raise ModeMismatchError(f"Cannot combine {mode.value} and {identity.mode.value} identities")
        coeff = Fraction(coeff)
        denominators |= identity.denominators
        premises |= identity.premises
        if coeff == 0:
            continue
        denominators |= {int(p) for p in primefactors(coeff.denominator)}
        lhs = lhs + coeff * identity.lhs
        rhs = rhs + coeff * identity.rhs
    return HIdentity(lhs, rhs, frozenset(denominators), frozenset(premises))


def as_premise(identity: HIdentity, label: str) -> HIdentity:
    return replace(identity, premises=identity.premises | {label})


## Text form

def format_identity(identity: HIdentity) -> str:
    return f"h({format_poly(identity.lhs)}) = {format_poly(identity.rhs, RHS_HEAD)}"


def parse_identity(text: str, mode: Mode | str = Mode.NONCOMMUTATIVE) -> HIdentity:
    lhs, rhs = parse_identity_parts(text, mode)
    denominators = {
        int(p)
        for _, c in lhs.terms + rhs.terms
        for p in primefactors(Fraction(c).denominator)
    }
    return HIdentity(lhs, rhs, frozenset(denominators))


## Evaluation on finite models

def _scalar_mod(c: Fraction, m: int) -> int:
    if gcd(c.denominator, m) != 1:
        raise DenominatorError(f"Coefficient {c} has no image in Z{m}")
    return c.numerator * pow(c.denominator, -1, m) % m


def _assignments(size: int, k: int, cap: int, samples: int | None, seed_value: int, unsafe_override: bool):
    total = size**k
    if total <= cap or unsafe_override:
        if k == 0:
            return np.zeros((1, 0), dtype=np.int64)
        grids = np.indices((size,) * k, dtype=np.int64).reshape(k, -1).T
        return grids
    if samples:
        logger.info("assignment space %d above cap %d, sampling %d assignments", total, cap, samples)
        rng = np.random.default_rng(seed_value)
        return rng.integers(0, size, size=(samples, k), dtype=np.int64)
    raise GuardError(f"Assignment space {size}^{k} = {total} exceeds the cap of {cap}")


def _word_values(word, values: dict[int, np.ndarray], ring, cache: dict) -> np.ndarray:
    if word in cache:
        return cache[word]
    if not word:
        if not ring.unital:
            raise ModelError(f"{ring.name} has no unit, constant terms cannot be evaluated")
        any_value = next(iter(values.values()), None)
        count = 1 if any_value is None else any_value.shape[0]
        result = np.broadcast_to(ring.unit, (count, ring.dim))
    elif len(word) == 1:
        result = values[word[0]]
    else:
        result = ring.mul(_word_values(word[:-1], values, ring, cache), values[word[-1]])
    cache[word] = result
    return result


def find_violation(
    identity: HIdentity,
    h: AdditiveMap,
    cap: int = ASSIGNMENT_CAP,
    samples: int | None = None,
    seed_value: int = 0,
    unsafe_override: bool = False,
) -> dict[str, str] | None:
    """First assignment (in enumeration order) where the identity fails, or None."""
    A, B = h.domain, h.codomain
    m = B.modulus
    if not B.commutative:
        raise ModelError(f"Codomain {B.name} is not commutative")
    if identity.mode == Mode.COMMUTATIVE and not A.commutative:
        raise ModelError(f"A commutative-mode identity says nothing about the noncommutative ring {A.name}")
    for p in sorted(identity.denominators):
        if m % p == 0:
            raise DenominatorError(f"Prime {p} used in the derivation is not invertible in {B.name}")

    variables = identity.variables()
    picks = _assignments(A.size, len(variables), cap, samples, seed_value, unsafe_override)
    count = picks.shape[0]
    weights = A.modulus ** np.arange(A.dim - 1, -1, -1, dtype=np.int64)
    xs = {v: (picks[:, j, None] // weights) % A.modulus for j, v in enumerate(variables)}
    hs = {v: h(xs[v]) for v in variables}

    lhs = np.zeros((count, B.dim), dtype=np.int64)
    cache: dict = {}
    for word, c in identity.lhs.terms:
        lhs = (lhs + _scalar_mod(c, m) * h(_word_values(word, xs, A, cache))) % m
    rhs = np.zeros((count, B.dim), dtype=np.int64)
    cache = {}
    for word, c in identity.rhs.terms:
        rhs = (rhs + _scalar_mod(c, m) * _word_values(word, hs, B, cache)) % m

    bad = np.nonzero(np.any(lhs != rhs, axis=1))[0]
    if bad.size == 0:
        return None
    row = int(bad[0])
    return {var_name(v): A.format(xs[v][row]) for v in variables}


def evaluate(
    identity: HIdentity,
    h: AdditiveMap,
    cap: int = ASSIGNMENT_CAP,
    samples: int | None = None,
    seed_value: int = 0,
    unsafe_override: bool = False,
) -> bool:
    violation = find_violation(identity, h, cap, samples, seed_value, unsafe_override)
    if violation is not None:
        logger.debug("%s fails for %s at %s", identity, h.label(), violation)
    return violation is None
