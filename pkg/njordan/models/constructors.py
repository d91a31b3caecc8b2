"""
Constructors for the finite rings used by the toolkit.

Matrix-type rings use the matrix units E_ij as basis, ordered row-major over the admissible (i, j)
positions, and label them "E12", "E23", ... (1-based).
"""

import numpy as np

from njordan.config import ALLOWED_MODULI, MAX_MATRIX_SIZE, MAX_POINTS
from njordan.errors import GuardError
from njordan.models.ring import FiniteRing


def _check_modulus(m: int, unsafe_override: bool):
    if m < 2:
        raise ValueError(f"Modulus must be at least 2, got {m}")
    if m not in ALLOWED_MODULI and not unsafe_override:
        raise GuardError(f"Modulus {m} is outside the desk-scale set {ALLOWED_MODULI}")


def _check_size(k: int, unsafe_override: bool):
    if k < 1:
        raise ValueError(f"Matrix size must be positive, got {k}")
    if k > MAX_MATRIX_SIZE and not unsafe_override:
        raise GuardError(f"Matrix size {k} exceeds the guard {MAX_MATRIX_SIZE}")


def make_zm(m: int, unsafe_override: bool = False) -> FiniteRing:
    _check_modulus(m, unsafe_override)
    return FiniteRing(f"Z{m}", m, [[[1]]], unit=[1], involution=[[1]], labels=["1"])


def _matrix_units(positions: list[tuple[int, int]], m: int) -> np.ndarray:
    where = {pos: idx for idx, pos in enumerate(positions)}
    d = len(positions)
    table = np.zeros((d, d, d), dtype=np.int64)
    for a, (i, j) in enumerate(positions):
        for b, (j2, l) in enumerate(positions):
            if j == j2 and (i, l) in where:
                table[a, b, where[(i, l)]] = 1
    return table


def _labels(positions: list[tuple[int, int]]) -> list[str]:
    return [f"E{i + 1}{j + 1}" for i, j in positions]


def matrix_ring(k: int, m: int, unsafe_override: bool = False) -> FiniteRing:
    """Full matrix ring M_k(Z_m) with transpose as involution."""
    _check_size(k, unsafe_override)
    _check_modulus(m, unsafe_override)
    positions = [(i, j) for i in range(k) for j in range(k)]
    where = {pos: idx for idx, pos in enumerate(positions)}
    transpose = np.zeros((len(positions), len(positions)), dtype=np.int64)
    for (i, j), idx in where.items():
        transpose[where[(j, i)], idx] = 1
    unit = np.zeros(len(positions), dtype=np.int64)
    for i in range(k):
        unit[where[(i, i)]] = 1
    return FiniteRing(
        f"M{k}(Z{m})", m, _matrix_units(positions, m), unit=unit, involution=transpose, labels=_labels(positions)
    )


def strict_upper(k: int, m: int, unsafe_override: bool = False) -> FiniteRing:
    """Strictly upper triangular k x k matrices over Z_m, a nilpotent ring of index k."""
    _check_size(k, unsafe_override)
    _check_modulus(m, unsafe_override)
    positions = [(i, j) for i in range(k) for j in range(i + 1, k)]
    if not positions:
        raise ValueError("strict_upper needs k >= 2")
    return FiniteRing(f"N{k}(Z{m})", m, _matrix_units(positions, m), labels=_labels(positions))


def upper_triangular(k: int, m: int, unsafe_override: bool = False) -> FiniteRing:
    _check_size(k, unsafe_override)
    _check_modulus(m, unsafe_override)
    positions = [(i, j) for i in range(k) for j in range(i, k)]
    unit = np.array([1 if i == j else 0 for i, j in positions], dtype=np.int64)
    return FiniteRing(f"T{k}(Z{m})", m, _matrix_units(positions, m), unit=unit, labels=_labels(positions))


def product(a: FiniteRing, b: FiniteRing) -> FiniteRing:
    """Direct product A x B with componentwise operations."""
    if a.modulus != b.modulus:
        raise ValueError(f"Product factors need one modulus, got {a.modulus} and {b.modulus}")
    da, db = a.dim, b.dim
    d = da + db
    table = np.zeros((d, d, d), dtype=np.int64)
    table[:da, :da, :da] = a.table
    table[da:, da:, da:] = b.table
    unit = None
    if a.unital and b.unital:
        unit = np.concatenate([a.unit, b.unit])
    involution = None
    if a.involution is not None and b.involution is not None:
        involution = np.zeros((d, d), dtype=np.int64)
        involution[:da, :da] = a.involution
        involution[da:, da:] = b.involution
    labels = [f"({lab},0)" for lab in a.labels] + [f"(0,{lab})" for lab in b.labels]
    return FiniteRing(f"{a.name}x{b.name}", a.modulus, table, unit=unit, involution=involution, labels=labels)


def power_ring(a: FiniteRing, copies: int) -> FiniteRing:
    ring = a
    for _ in range(copies - 1):
        ring = product(ring, a)
    return ring


def function_ring(a: FiniteRing, npoints: int, unsafe_override: bool = False) -> FiniteRing:
    """A-valued functions on a finite point set with pointwise operations."""
    if npoints < 1:
        raise ValueError(f"Point count must be positive, got {npoints}")
    if npoints > MAX_POINTS and not unsafe_override:
        raise GuardError(f"Point count {npoints} exceeds the guard {MAX_POINTS}")
    d = a.dim * npoints
    table = np.zeros((d, d, d), dtype=np.int64)
    for p in range(npoints):
        block = slice(p * a.dim, (p + 1) * a.dim)
        table[block, block, block] = a.table
    unit = None if a.unit is None else np.tile(a.unit, npoints)
    labels = [f"{lab}@p{p + 1}" for p in range(npoints) for lab in a.labels]
    return FiniteRing(f"Fun({a.name},{npoints})", a.modulus, table, unit=unit, labels=labels)
