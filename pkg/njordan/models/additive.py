"""
Enumeration of additive maps A -> B.

Additive maps between (Z_m)^dA and (Z_m)^dB are exactly the dB x dA matrices over Z_m. Map number k
is the matrix whose row-major entries are the base-m digits of k, first entry most significant.
"""

import logging
from typing import Iterator

import numpy as np

from njordan.config import ENUMERATION_CAP
from njordan.errors import GuardError, ModelError
from njordan.models.ring import AdditiveMap, FiniteRing

logger = logging.getLogger(__name__)


def map_count(domain: FiniteRing, codomain: FiniteRing) -> int:
    return domain.modulus ** (domain.dim * codomain.dim)


def _check_pair(domain: FiniteRing, codomain: FiniteRing):
    if domain.modulus != codomain.modulus:
        raise ModelError(f"{domain.name} and {codomain.name} have different moduli")


def matrices_for(domain: FiniteRing, codomain: FiniteRing, indices: np.ndarray) -> np.ndarray:
    entries = domain.dim * codomain.dim
    weights = domain.modulus ** np.arange(entries - 1, -1, -1, dtype=np.int64)
    digits = (np.asarray(indices, dtype=np.int64)[:, None] // weights) % domain.modulus
    return digits.reshape(-1, codomain.dim, domain.dim)


def index_of_matrix(domain: FiniteRing, matrix) -> int:
    flat = np.asarray(matrix, dtype=np.int64).reshape(-1) % domain.modulus
    weights = domain.modulus ** np.arange(flat.size - 1, -1, -1, dtype=np.int64)
    return int(flat @ weights)


def map_batches(
    domain: FiniteRing,
    codomain: FiniteRing,
    start: int = 0,
    stop: int | None = None,
    batch: int = 4096,
    sample: int | None = None,
    seed_value: int = 0,
    unsafe_override: bool = False,
) -> Iterator[tuple[np.ndarray | None, np.ndarray]]:
    """Yield (indices, matrices) blocks; indices is None for sampled maps."""
    _check_pair(domain, codomain)
    total = map_count(domain, codomain)
    if sample is not None:
        rng = np.random.default_rng(seed_value)
        logger.info("sampling %d of %d maps %s -> %s (seed %d)", sample, total, domain.name, codomain.name, seed_value)
        for first in range(0, sample, batch):
            size = min(batch, sample - first)
            yield None, rng.integers(0, domain.modulus, size=(size, codomain.dim, domain.dim), dtype=np.int64)
        return
    if total > ENUMERATION_CAP and not unsafe_override:
        raise GuardError(
            f"{total} additive maps {domain.name} -> {codomain.name} exceed the cap of {ENUMERATION_CAP}; "
            f"use sampling"
        )
    if total >= 2**62:
        raise GuardError(f"{total} additive maps cannot be indexed exhaustively")
    stop = total if stop is None else min(stop, total)
    for first in range(start, stop, batch):
        indices = np.arange(first, min(first + batch, stop), dtype=np.int64)
        yield indices, matrices_for(domain, codomain, indices)


def enumerate_additive_maps(
    domain: FiniteRing,
    codomain: FiniteRing,
    sample: int | None = None,
    seed_value: int = 0,
    unsafe_override: bool = False,
) -> Iterator[AdditiveMap]:
    drawn = 0
    for indices, matrices in map_batches(domain, codomain, sample=sample, seed_value=seed_value, unsafe_override=unsafe_override):
        for row, matrix in enumerate(matrices):
            if indices is None:
                yield AdditiveMap(domain, codomain, matrix, name=f"sample#{drawn}")
                drawn += 1
            else:
                yield AdditiveMap(domain, codomain, matrix, index=int(indices[row]))
