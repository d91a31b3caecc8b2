"""
Structural facts about finite rings: nilpotency index and product witnesses.
"""

import numpy as np
from sympy import isprime

from njordan.errors import ModelError
from njordan.models.ring import FiniteRing
from njordan.services.linalg import echelon_mod_p


def _span(ring: FiniteRing, rows: np.ndarray) -> np.ndarray:
    if not isprime(ring.modulus):
        raise ModelError(f"Span computations need a prime modulus, {ring.name} has {ring.modulus}")
    if rows.size == 0:
        return rows.reshape(0, ring.dim)
    return echelon_mod_p(rows, ring.modulus)


def power_spans(ring: FiniteRing, max_power: int | None = None) -> list[np.ndarray]:
    """Bases of A, A^2, A^3, ... (A^k is the additive span of all k-fold products)."""
    limit = max_power or ring.dim + 1
    spans = [_span(ring, ring.basis())]
    while len(spans) < limit:
        current = spans[-1]
        if current.shape[0] == 0:
            break
        products = ring.mul(current[:, None, :], ring.basis()[None, :, :]).reshape(-1, ring.dim)
        nxt = _span(ring, products)
        spans.append(nxt)
        if nxt.shape[0] == current.shape[0]:
            break
    return spans


def nilpotency_index(ring: FiniteRing) -> int | None:
    spans = power_spans(ring)
    if spans[-1].shape[0] == 0:
        return len(spans)
    return None


def nonzero_product(ring: FiniteRing, length: int) -> tuple[tuple[int, ...], np.ndarray] | None:
    """First tuple of basis indices (lexicographic) whose product is nonzero."""
    basis = ring.basis()

    def walk(prefix: tuple[int, ...], value: np.ndarray):
        if len(prefix) == length:
            return prefix, value
        for j in range(ring.dim):
            nxt = ring.mul(value, basis[j])
            if np.any(nxt):
                found = walk(prefix + (j,), nxt)
                if found:
                    return found
        return None

    for i in range(ring.dim):
        found = walk((i,), basis[i])
        if found:
            return found
    return None


def all_powers_vanish(ring: FiniteRing, n: int, batch: int = 8192) -> bool:
    for _, elements in ring.element_batches(batch):
        if np.any(ring.power(elements, n)):
            return False
    return True
