"""
n-Jordan and n-ring predicates on additive maps.

The batch functions work on a stack of map matrices (N, dB, dA) and return, per map, the index of
the first failing element (or basis tuple), -1 when the map passes. The single-map wrappers turn
that index into a witness, and the recheck_* functions confirm witnesses with plain Python table
lookups, sharing no code with the numpy path.
"""

import logging
from functools import lru_cache

import numpy as np

from njordan.config import TUPLE_CAP
from njordan.errors import GuardError, ModelError
from njordan.models.ring import AdditiveMap, FiniteRing
from njordan.schema.reports import PredicateReport

logger = logging.getLogger(__name__)

WORK_BUDGET = 4_000_000


def _apply(matrices: np.ndarray, elements: np.ndarray, m: int) -> np.ndarray:
    return np.einsum("nij,ej->nei", matrices, elements) % m


## Batch checks

def jordan_failures(domain: FiniteRing, codomain: FiniteRing, matrices: np.ndarray, n: int) -> np.ndarray:
    m = domain.modulus
    count = matrices.shape[0]
    first = np.full(count, -1, dtype=np.int64)
    per_element = max(1, count * codomain.dim * codomain.dim)
    batch = int(max(1, min(8192, WORK_BUDGET // per_element)))
    for start, elements in domain.element_batches(batch):
        lhs = _apply(matrices, domain.power(elements, n), m)
        rhs = codomain.power(_apply(matrices, elements, m), n)
        bad = np.any(lhs != rhs, axis=2)
        hit = bad.any(axis=1) & (first < 0)
        first[hit] = start + np.argmax(bad[hit], axis=1)
        if np.all(first >= 0):
            break
    return first


@lru_cache(maxsize=32)
def basis_products(ring: FiniteRing, n: int) -> np.ndarray:
    """Products e_i1 * ... * e_in for all basis tuples, tuple (i1..in) at row i1*d^(n-1) + ... + in."""
    products = ring.basis()
    for _ in range(n - 1):
        products = ring.mul(products[:, None, :], ring.basis()[None, :, :]).reshape(-1, ring.dim)
    return products


def ring_failures(domain: FiniteRing, codomain: FiniteRing, matrices: np.ndarray, n: int) -> np.ndarray:
    """First failing basis tuple per map; exact because both sides are Z_m-multilinear."""
    m = domain.modulus
    products = basis_products(domain, n)
    tuples = products.shape[0]
    step = int(max(1, WORK_BUDGET // max(1, tuples * codomain.dim * codomain.dim)))
    first = np.full(matrices.shape[0], -1, dtype=np.int64)
    for lo in range(0, matrices.shape[0], step):
        block = matrices[lo:lo + step]
        lhs = _apply(block, products, m)
        images = block.transpose(0, 2, 1)
        rhs = images
        for _ in range(n - 1):
            rhs = codomain.mul(rhs[:, :, None, :], images[:, None, :, :]).reshape(block.shape[0], -1, codomain.dim)
        bad = np.any(lhs != rhs, axis=2)
        hit = bad.any(axis=1)
        first[lo:lo + step][hit] = np.argmax(bad[hit], axis=1)
    return first


## Single maps

def is_n_jordan(h: AdditiveMap, n: int) -> tuple[bool, list[int] | None]:
    idx = int(jordan_failures(h.domain, h.codomain, h.matrix[None], n)[0])
    if idx < 0:
        return True, None
    weights = h.domain.modulus ** np.arange(h.domain.dim - 1, -1, -1, dtype=np.int64)
    witness = [int(v) for v in (idx // weights) % h.domain.modulus]
    return False, witness


def is_jordan(h: AdditiveMap) -> tuple[bool, list[int] | None]:
    return is_n_jordan(h, 2)


def _tuple_witness(idx: int, base: int, n: int) -> list[int]:
    digits = []
    for _ in range(n):
        digits.append(idx % base)
        idx //= base
    return digits[::-1]


def is_n_ring(h: AdditiveMap, n: int, method: str = "basis", unsafe_override: bool = False) -> tuple[bool, list[list[int]] | None]:
    A, B = h.domain, h.codomain
    if method == "basis":
        idx = int(ring_failures(A, B, h.matrix[None], n)[0])
        if idx < 0:
            return True, None
        basis = A.basis()
        return False, [[int(v) for v in basis[i]] for i in _tuple_witness(idx, A.dim, n)]

    elif method == "exhaustive":
        if A.size**n > TUPLE_CAP and not unsafe_override:
            raise GuardError(f"{A.size}^{n} tuples exceed the cap of {TUPLE_CAP}; use method='basis'")
        elements = A.elements(unsafe_override)
        products = elements
        images = h(elements)
        image_products = images
        for _ in range(n - 1):
            products = A.mul(products[:, None, :], elements[None, :, :]).reshape(-1, A.dim)
            image_products = B.mul(image_products[:, None, :], images[None, :, :]).reshape(-1, B.dim)
        bad = np.nonzero(np.any(h(products) != image_products, axis=1))[0]
        if bad.size == 0:
            return True, None
        return False, [[int(v) for v in elements[i]] for i in _tuple_witness(int(bad[0]), A.size, n)]

    else:
        raise ValueError(f"Unsupported method {method!r}, expected 'basis' or 'exhaustive'")


## Independent re-checks

def _py_mul(ring: FiniteRing, a: list[int], b: list[int]) -> list[int]:
    table = ring.table.tolist()
    out = [0] * ring.dim
    for i, ai in enumerate(a):
        if not ai:
            continue
        for j, bj in enumerate(b):
            if not bj:
                continue
            for k, c in enumerate(table[i][j]):
                out[k] = (out[k] + ai * bj * c) % ring.modulus
    return out


def _py_apply(h: AdditiveMap, a: list[int]) -> list[int]:
    m = h.codomain.modulus
    return [sum(int(r) * int(x) for r, x in zip(row, a)) % m for row in h.matrix.tolist()]


def _py_product(ring: FiniteRing, factors: list[list[int]]) -> list[int]:
    result = list(factors[0])
    for f in factors[1:]:
        result = _py_mul(ring, result, f)
    return result


def recheck_jordan_failure(h: AdditiveMap, n: int, element: list[int]) -> bool:
    lhs = _py_apply(h, _py_product(h.domain, [element] * n))
    rhs = _py_product(h.codomain, [_py_apply(h, element)] * n)
    return lhs != rhs


def recheck_ring_failure(h: AdditiveMap, factors: list[list[int]]) -> bool:
    lhs = _py_apply(h, _py_product(h.domain, factors))
    rhs = _py_product(h.codomain, [_py_apply(h, f) for f in factors])
    return lhs != rhs


## Reports

def predicate_report(h: AdditiveMap, jordan_powers=(2, 3, 4), ring_powers=(2, 3)) -> PredicateReport:
    results: dict[str, bool] = {}
    witnesses: dict[str, list] = {}
    for n in jordan_powers:
        ok, witness = is_n_jordan(h, n)
        results[f"{n}-Jordan"] = ok
        if witness is not None:
            if not recheck_jordan_failure(h, n, witness):
                raise ModelError(f"{h.label()}: {n}-Jordan witness {witness} does not re-check")
            witnesses[f"{n}-Jordan"] = witness
    for n in ring_powers:
        ok, witness = is_n_ring(h, n)
        results[f"{n}-ring"] = ok
        if witness is not None:
            if not recheck_ring_failure(h, witness):
                raise ModelError(f"{h.label()}: {n}-ring witness {witness} does not re-check")
            witnesses[f"{n}-ring"] = witness
    return PredicateReport(
        map=h.label(),
        domain=h.domain.name,
        codomain=h.codomain.name,
        coordinates=h.coordinates(),
        results=results,
        witnesses=witnesses,
    )
