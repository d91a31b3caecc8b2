"""
Exact elimination backends.

`IncrementalEchelon` is a sparse, fraction-free row echelon form over the integers (standing in for
the rationals) or over GF(p). Every stored row remembers the integer combination of inserted
vectors that produced it, which is what turns a membership test into a certificate.
Pivot ties are broken by the lowest column index, so results are deterministic.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Hashable

import numpy as np
from sympy import isprime

Vector = dict[int, int]
Track = dict[Hashable, int]

TARGET = "target"


@dataclass(frozen=True)
class Field:
    prime: int | None = None

    @classmethod
    def parse(cls, text: str | None) -> "Field":
        if text in (None, "", "Q", "QQ", "rationals"):
            return cls(None)
        text = text.strip()
        if text.startswith("GF(") and text.endswith(")"):
            text = text[3:-1]
        try:
            p = int(text)
        except ValueError:
            raise ValueError(f"Unsupported field {text!r}, expected 'Q' or 'GF(p)'") from None
        if not isprime(p):
            raise ValueError(f"GF({p}) needs a prime modulus")
        return cls(p)

    @property
    def is_rational(self) -> bool:
        return self.prime is None

    @property
    def tag(self) -> str:
        return "Q" if self.prime is None else f"GF({self.prime})"

    def reduce(self, value: Fraction | int) -> int:
        """Integer image of an exact scalar in this field; rationals must be pre-scaled."""
        value = Fraction(value)
        if self.prime is None:
            if value.denominator != 1:
                raise ValueError("Rational entries must be scaled to integers first")
            return int(value)
        if value.denominator % self.prime == 0:
            raise ZeroDivisionError(f"{value} has no image in GF({self.prime})")
        return value.numerator * pow(value.denominator, -1, self.prime) % self.prime


def _content(row: Vector, track: Track) -> int:
    g = 0
    for c in row.values():
        g = gcd(g, c)
    for c in track.values():
        g = gcd(g, c)
    return g


def _axpy(a: int, x: dict, b: int, y: dict, p: int | None) -> dict:
    """a*x - b*y with zero entries dropped (mod p when p is set)."""
    out = {}
    for k in set(x) | set(y):
        v = a * x.get(k, 0) - b * y.get(k, 0)
        if p is not None:
            v %= p
        if v:
            out[k] = v
    return out


class IncrementalEchelon:

    def __init__(self, field: Field = Field()):
        self.field = field
        self.pivots: dict[int, tuple[Vector, Track]] = {}

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def reduce(self, row: Vector, track: Track) -> tuple[Vector, Track]:
        p = self.field.prime
        row, track = dict(row), dict(track)
        if p is not None:
            row = {k: v % p for k, v in row.items() if v % p}
            track = {k: v % p for k, v in track.items() if v % p}
        for col in sorted(self.pivots):
            b = row.get(col, 0)
            if not b:
                continue
            pivot_row, pivot_track = self.pivots[col]
            if p is None:
                a = pivot_row[col]
                g = gcd(a, b)
                row = _axpy(a // g, row, b // g, pivot_row, None)
                track = _axpy(a // g, track, b // g, pivot_track, None)
                g = _content(row, track)
                if g > 1:
                    row = {k: v // g for k, v in row.items()}
                    track = {k: v // g for k, v in track.items()}
            else:
                row = _axpy(1, row, b, pivot_row, p)
                track = _axpy(1, track, b, pivot_track, p)
        return row, track

    def insert(self, row: Vector, track: Track) -> bool:
        row, track = self.reduce(row, track)
        if not row:
            return False
        lead = min(row)
        if self.field.prime is not None:
            inv = pow(row[lead], -1, self.field.prime)
            row = {k: v * inv % self.field.prime for k, v in row.items()}
            track = {k: v * inv % self.field.prime for k, v in track.items()}
        self.pivots[lead] = (row, track)
        return True

    def express(self, target: Vector, scale: int = 1) -> tuple[dict[Hashable, Fraction] | None, dict[int, Fraction]]:
        """Coefficients writing `target` as a combination of inserted vectors, or None and the residual."""
        row, track = self.reduce(target, {TARGET: scale})
        scale = track.get(TARGET, 0)
        p = self.field.prime
        if p is None:
            residual = {k: Fraction(v, scale) for k, v in row.items()}
        else:
            inv = pow(scale, -1, p)
            residual = {k: Fraction(v * inv % p) for k, v in row.items()}
        if row:
            return None, residual
        coeffs = {}
        for key, value in track.items():
            if key == TARGET:
                continue
            if p is None:
                coeffs[key] = Fraction(-value, scale)
            else:
                coeffs[key] = Fraction(-value * inv % p)
        return {k: c for k, c in coeffs.items() if c}, residual


def echelon_mod_p(rows, p: int) -> np.ndarray:
    """Reduced row echelon basis of the row space over GF(p)."""
    m = np.array(rows, dtype=np.int64) % p
    if m.ndim == 1:
        m = m[None, :]
    n_rows, n_cols = m.shape
    r = 0
    for c in range(n_cols):
        if r == n_rows:
            break
        nz = np.nonzero(m[r:, c])[0]
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        m[[r, piv]] = m[[piv, r]]
        m[r] = m[r] * pow(int(m[r, c]), -1, p) % p
        col = m[:, c].copy()
        col[r] = 0
        m = (m - np.outer(col, m[r])) % p
        r += 1
    return m[:r]
