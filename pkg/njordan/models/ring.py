"""
Finite rings with additive group (Z_m)^d, stored as a structure-constant table.

table[i, j] is the coordinate vector of e_i * e_j. Elements are integer vectors of length d with
entries in 0..m-1; every arithmetic helper accepts a single element or a batch (..., d) and
broadcasts, so the search loop can multiply thousands of elements in one call.
"""

import logging

import numpy as np

from njordan.config import ELEMENT_CAP
from njordan.errors import GuardError, ModelError

logger = logging.getLogger(__name__)


class FiniteRing:

    def __init__(
        self,
        name: str,
        modulus: int,
        table,
        unit=None,
        involution=None,
        labels: list[str] | None = None,
    ):
        table = np.asarray(table, dtype=np.int64) % modulus
        d = table.shape[0]
        if table.shape != (d, d, d):
            raise ValueError(f"Structure table must have shape (d, d, d), got {table.shape}")
        self.name = name
        self.modulus = modulus
        self.dim = d
        self.table = table
        self.labels = labels or [f"e{i + 1}" for i in range(d)]
        self.involution = None if involution is None else np.asarray(involution, dtype=np.int64) % modulus
        self._flat = table.reshape(d, d * d)

        self._check_associative()
        self.commutative = bool(np.array_equal(table, table.transpose(1, 0, 2)))
        self.unit = None if unit is None else np.asarray(unit, dtype=np.int64) % modulus
        if self.unit is not None:
            self._check_unit()

    # ---- Structure checks ----

    def _check_associative(self):
        m, t = self.modulus, self.table
        left = np.einsum("ijl,lkr->ijkr", t, t) % m
        right = np.einsum("jkl,ilr->ijkr", t, t) % m
        bad = np.argwhere(np.any(left != right, axis=-1))
        if bad.size:
            i, j, k = (int(v) for v in bad[0])
            raise ModelError(
                f"{self.name}: associativity fails on basis triple "
                f"({self.labels[i]}, {self.labels[j]}, {self.labels[k]})"
            )

    def _check_unit(self):
        m, t, u = self.modulus, self.table, self.unit
        eye = np.eye(self.dim, dtype=np.int64)
        if not (np.array_equal(np.einsum("i,ijk->jk", u, t) % m, eye)
                and np.array_equal(np.einsum("j,ijk->ik", u, t) % m, eye)):
            raise ModelError(f"{self.name}: declared unit is not a two-sided identity")

    @property
    def unital(self) -> bool:
        return self.unit is not None

    @property
    def size(self) -> int:
        return self.modulus ** self.dim

    # ---- Arithmetic ----

    def element(self, coords) -> np.ndarray:
        a = np.asarray(coords, dtype=np.int64) % self.modulus
        if a.shape[-1] != self.dim:
            raise ValueError(f"{self.name} elements have {self.dim} coordinates, got {a.shape[-1]}")
        return a

    def zero(self) -> np.ndarray:
        return np.zeros(self.dim, dtype=np.int64)

    def basis(self) -> np.ndarray:
        return np.eye(self.dim, dtype=np.int64)

    def add(self, a, b) -> np.ndarray:
        return (np.asarray(a) + np.asarray(b)) % self.modulus

    def neg(self, a) -> np.ndarray:
        return (-np.asarray(a)) % self.modulus

    def scale(self, c: int, a) -> np.ndarray:
        return (c * np.asarray(a)) % self.modulus

    def mul(self, a, b) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        left = (a @ self._flat).reshape(a.shape[:-1] + (self.dim, self.dim))
        return np.einsum("...j,...jk->...k", b, left) % self.modulus

    def power(self, a, n: int) -> np.ndarray:
        if n < 1:
            raise ValueError("Powers start at 1 in a possibly non-unital ring")
        result = np.asarray(a, dtype=np.int64)
        for _ in range(n - 1):
            result = self.mul(result, a)
        return result

    def product(self, factors) -> np.ndarray:
        factors = list(factors)
        result = np.asarray(factors[0], dtype=np.int64)
        for f in factors[1:]:
            result = self.mul(result, f)
        return result

    def is_zero(self, a) -> np.ndarray | bool:
        return ~np.any(np.asarray(a) % self.modulus, axis=-1)

    # ---- Enumeration ----

    def elements(self, unsafe_override: bool = False) -> np.ndarray:
        """All elements, row k is the base-m expansion of k with the first coordinate most significant."""
        if self.size > ELEMENT_CAP and not unsafe_override:
            raise GuardError(f"{self.name} has {self.size} elements, above the cap of {ELEMENT_CAP}")
        idx = np.arange(self.size, dtype=np.int64)
        weights = self.modulus ** np.arange(self.dim - 1, -1, -1, dtype=np.int64)
        return (idx[:, None] // weights) % self.modulus

    def element_batches(self, batch: int = 8192):
        """Yield (start, elements) blocks in enumeration order without materialising the whole ring."""
        weights = self.modulus ** np.arange(self.dim - 1, -1, -1, dtype=np.int64)
        for start in range(0, self.size, batch):
            idx = np.arange(start, min(start + batch, self.size), dtype=np.int64)
            yield start, (idx[:, None] // weights) % self.modulus

    def index_of(self, a) -> int:
        weights = self.modulus ** np.arange(self.dim - 1, -1, -1, dtype=np.int64)
        return int(np.asarray(a, dtype=np.int64) % self.modulus @ weights)

    def random_elements(self, count: int, rng: np.random.Generator) -> np.ndarray:
        return rng.integers(0, self.modulus, size=(count, self.dim), dtype=np.int64)

    # ---- Printing ----

    def format(self, a) -> str:
        parts = []
        for label, c in zip(self.labels, np.asarray(a, dtype=np.int64) % self.modulus):
            if c == 0:
                continue
            parts.append(label if c == 1 else f"{int(c)}*{label}")
        return " + ".join(parts) if parts else "0"

    def describe(self) -> dict:
        return {
            "name": self.name,
            "modulus": self.modulus,
            "dim": self.dim,
            "size": self.size,
            "commutative": self.commutative,
            "unital": self.unital,
        }

    def __repr__(self):
        return f"FiniteRing({self.name!r}, m={self.modulus}, d={self.dim})"


class AdditiveMap:
    """A Z_m-linear map h: A -> B, stored as a d_B x d_A matrix acting on coordinate columns."""

    def __init__(self, domain: FiniteRing, codomain: FiniteRing, matrix, index: int | None = None, name: str | None = None):
        if domain.modulus != codomain.modulus:
            raise ModelError(
                f"Additive maps need a shared modulus, got {domain.modulus} and {codomain.modulus}"
            )
        matrix = np.asarray(matrix, dtype=np.int64) % domain.modulus
        if matrix.shape != (codomain.dim, domain.dim):
            raise ValueError(f"Map matrix must be {codomain.dim}x{domain.dim}, got {matrix.shape}")
        self.domain = domain
        self.codomain = codomain
        self.matrix = matrix
        self.index = index
        self.name = name

    def __call__(self, a) -> np.ndarray:
        return (np.asarray(a, dtype=np.int64) @ self.matrix.T) % self.codomain.modulus

    def coordinates(self) -> list[int]:
        return [int(v) for v in self.matrix.reshape(-1)]

    def label(self) -> str:
        if self.name:
            return self.name
        if self.index is not None:
            return f"map#{self.index}"
        return "map" + str(self.coordinates())

    def __repr__(self):
        return f"AdditiveMap({self.label()}: {self.domain.name} -> {self.codomain.name})"
