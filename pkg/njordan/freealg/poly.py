"""
Exact polynomials in the free (noncommutative) algebra and in the commutative polynomial ring.

A word is a tuple of variable ids. In commutative mode every word is kept sorted ascending, so a
word is a multiset and doubles as an exponent vector (see `exponents`). Terms are stored in graded
lexicographic order (length first, then left-to-right id comparison) with no zero coefficients,
so two equal polynomials always have identical representations.
"""

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from itertools import groupby
from typing import Iterable, Mapping, Union

from njordan.errors import ModeMismatchError
from njordan.freealg.variables import var_name

Word = tuple[int, ...]
Scalar = Fraction
ScalarLike = Union[int, Fraction, str]


class Mode(str, Enum):
    NONCOMMUTATIVE = "nc"
    COMMUTATIVE = "c"


def as_scalar(value: ScalarLike) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("Booleans are not scalars")
    if isinstance(value, (int, str)):
        return Fraction(value)
    raise TypeError(f"Not an exact scalar: {value!r}")


def word_key(word: Word) -> tuple[int, Word]:
    return (len(word), word)


def normalize_word(word: Iterable[int], mode: Mode) -> Word:
    word = tuple(word)
    return tuple(sorted(word)) if mode == Mode.COMMUTATIVE else word


def exponents(word: Word) -> dict[int, int]:
    """Exponent vector of a commutative word, as {variable id: exponent}."""
    return {v: len(list(run)) for v, run in groupby(sorted(word))}


@dataclass(frozen=True)
class FreePoly:
    terms: tuple[tuple[Word, Fraction], ...] = ()
    mode: Mode = Mode.NONCOMMUTATIVE

    # ---- Construction ----

    @classmethod
    def from_dict(cls, coeffs: Mapping[Iterable[int], ScalarLike], mode: Mode = Mode.NONCOMMUTATIVE) -> "FreePoly":
        merged: dict[Word, Fraction] = {}
        for word, c in coeffs.items():
            w = normalize_word(word, mode)
            merged[w] = merged.get(w, Fraction(0)) + as_scalar(c)
        terms = tuple(sorted(((w, c) for w, c in merged.items() if c != 0), key=lambda t: word_key(t[0])))
        return cls(terms, Mode(mode))

    @classmethod
    def zero(cls, mode: Mode = Mode.NONCOMMUTATIVE) -> "FreePoly":
        return cls((), Mode(mode))

    @classmethod
    def one(cls, mode: Mode = Mode.NONCOMMUTATIVE) -> "FreePoly":
        return cls.constant(1, mode)

    @classmethod
    def constant(cls, c: ScalarLike, mode: Mode = Mode.NONCOMMUTATIVE) -> "FreePoly":
        return cls.from_dict({(): c}, mode)

    @classmethod
    def monomial(cls, word: Iterable[int], c: ScalarLike = 1, mode: Mode = Mode.NONCOMMUTATIVE) -> "FreePoly":
        return cls.from_dict({tuple(word): c}, mode)

    @classmethod
    def variable(cls, var_id: int, mode: Mode = Mode.NONCOMMUTATIVE) -> "FreePoly":
        return cls.monomial((var_id,), 1, mode)

    # ---- Inspection ----

    def as_dict(self) -> dict[Word, Fraction]:
        return dict(self.terms)

    def coeff(self, word: Iterable[int]) -> Fraction:
        return self.as_dict().get(normalize_word(word, self.mode), Fraction(0))

    def is_zero(self) -> bool:
        return not self.terms

    def words(self) -> list[Word]:
        return [w for w, _ in self.terms]

    def variables(self) -> tuple[int, ...]:
        return tuple(sorted({v for w, _ in self.terms for v in w}))

    def degree(self) -> int:
        return max((len(w) for w, _ in self.terms), default=-1)

    def is_homogeneous(self, degree: int) -> bool:
        return all(len(w) == degree for w, _ in self.terms)

    def denominators(self) -> set[int]:
        return {c.denominator for _, c in self.terms if c.denominator != 1}

    # ---- Ring operations ----

    def _check_mode(self, other: "FreePoly"):
        if self.mode != other.mode:
            raise ModeMismatchError(f"Cannot combine {self.mode.value} and {other.mode.value} polynomials")

    def __add__(self, other):
        if not isinstance(other, FreePoly):
            return NotImplemented
        self._check_mode(other)
        merged = self.as_dict()
        for w, c in other.terms:
            merged[w] = merged.get(w, Fraction(0)) + c
        return FreePoly.from_dict(merged, self.mode)

    def __neg__(self):
        return FreePoly(tuple((w, -c) for w, c in self.terms), self.mode)

    def __sub__(self, other):
        if not isinstance(other, FreePoly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, FreePoly):
            self._check_mode(other)
            product: dict[Word, Fraction] = {}
            for w1, c1 in self.terms:
                for w2, c2 in other.terms:
                    w = normalize_word(w1 + w2, self.mode)
                    product[w] = product.get(w, Fraction(0)) + c1 * c2
            return FreePoly.from_dict(product, self.mode)
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return scalar_mul(other, self)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return scalar_mul(other, self)
        return NotImplemented

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError(f"Exponent must be a non-negative integer, got {exponent!r}")
        result = FreePoly.one(self.mode)
        for _ in range(exponent):
            result = result * self
        return result

    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"FreePoly({format_poly(self)!r}, mode={self.mode.value})"


CommPoly = FreePoly


def add(p: FreePoly, q: FreePoly) -> FreePoly:
    return p + q


def mul(p: FreePoly, q: FreePoly) -> FreePoly:
    return p * q


def scalar_mul(c: ScalarLike, p: FreePoly) -> FreePoly:
    c = as_scalar(c)
    if c == 0:
        return FreePoly.zero(p.mode)
    return FreePoly(tuple((w, c * k) for w, k in p.terms), p.mode)


def abelianize(p: FreePoly) -> FreePoly:
    return FreePoly.from_dict(p.as_dict(), Mode.COMMUTATIVE) if p.mode == Mode.NONCOMMUTATIVE else p


## Printing

def format_scalar(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_word(word: Word, head: str | None = None) -> str:
    if not word:
        return "1"
    parts = []
    for v, run in groupby(word):
        power = len(list(run))
        symbol = f"{head}({var_name(v)})" if head else var_name(v)
        parts.append(symbol if power == 1 else f"{symbol}^{power}")
    return "*".join(parts)


def format_poly(p: FreePoly, head: str | None = None) -> str:
    if p.is_zero():
        return "0"
    out = []
    for i, (word, c) in enumerate(p.terms):
        sign = "-" if c < 0 else "+"
        magnitude = abs(c)
        if not word:
            body = format_scalar(magnitude)
        elif magnitude == 1:
            body = format_word(word, head)
        else:
            body = f"{format_scalar(magnitude)}*{format_word(word, head)}"
        if i == 0:
            out.append(body if sign == "+" else f"-{body}")
        else:
            out.append(f" {sign} {body}")
    return "".join(out)
