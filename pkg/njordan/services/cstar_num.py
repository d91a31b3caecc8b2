"""
Numeric checks on the commutative C*-algebras C^k (pointwise product, sup norm, conjugation).

Hypotheses such as "h is n-Jordan" are polynomial identities in the entries of a, so they are
checked on seeded random samples from the complex unit square. Functionals are classified exactly
with sympy.
"""

import itertools
import logging
from dataclasses import dataclass

import numpy as np
import sympy

from njordan.config import ALGEBRA_TOL, DEFAULT_SAMPLES, FILTER_TOL
from njordan.errors import ContractivityViolation, GuardError
from njordan.schema.reports import (
    Corollary26Report,
    FilterVerdict,
    FunctionalReport,
    RejectedMap,
    Step2Report,
    Theorem27Report,
)

logger = logging.getLogger(__name__)


class DiagAlgebra:

    def __init__(self, dim: int):
        if dim < 1:
            raise ValueError(f"Dimension must be positive, got {dim}")
        self.dim = dim

    def norm(self, a) -> np.ndarray:
        return np.max(np.abs(a), axis=-1)

    def star(self, a) -> np.ndarray:
        return np.conj(a)

    def mul(self, a, b) -> np.ndarray:
        return np.asarray(a) * np.asarray(b)

    def random_elements(self, count: int, seed_value: int = 0) -> np.ndarray:
        rng = np.random.default_rng(seed_value)
        return rng.random((count, self.dim)) + 1j * rng.random((count, self.dim))

    def c_star_defect(self, a) -> np.ndarray:
        """| ||a* a|| - ||a||^2 |, zero up to rounding."""
        return np.abs(self.norm(self.mul(self.star(a), a)) - self.norm(a) ** 2)


@dataclass
class LinearMapC:
    matrix: np.ndarray
    tol: float = FILTER_TOL
    name: str | None = None

    def __post_init__(self):
        self.matrix = np.atleast_2d(np.asarray(self.matrix, dtype=complex))

    @property
    def domain_dim(self) -> int:
        return self.matrix.shape[1]

    @property
    def codomain_dim(self) -> int:
        return self.matrix.shape[0]

    def __call__(self, a) -> np.ndarray:
        return np.asarray(a) @ self.matrix.T

    def components(self) -> list["LinearMapC"]:
        return [LinearMapC(self.matrix[i:i + 1], self.tol, f"{self.label()}[{i}]") for i in range(self.codomain_dim)]

    def is_real(self) -> bool:
        return bool(np.all(np.abs(self.matrix.imag) <= ALGEBRA_TOL))

    def label(self) -> str:
        if self.name:
            return self.name
        return format_matrix(self.matrix)


def format_complex(z: complex) -> str:
    z = complex(z)
    re, im = round(z.real, 12) + 0.0, round(z.imag, 12) + 0.0
    if im == 0:
        return f"{re:g}"
    if re == 0:
        return f"{im:g}i"
    return f"{re:g}{im:+g}i"


def format_matrix(matrix: np.ndarray) -> str:
    return "[" + "; ".join(", ".join(format_complex(z) for z in row) for row in np.atleast_2d(matrix)) + "]"


## Exact classification

def classify_njordan_functionals(m: int, n: int) -> list[LinearMapC]:
    """All linear f: C^m -> C with f(a^n) = f(a)^n, by coefficient comparison in a_1..a_m."""
    if n not in (2, 3, 4):
        raise GuardError(f"Power {n} is outside the supported set (2, 3, 4)")
    if not 1 <= m <= 6:
        raise GuardError(f"Dimension {m} is outside 1..6")
    a = sympy.symbols(f"a1:{m + 1}")
    c = sympy.symbols(f"c1:{m + 1}")
    def f(values):
        return sum(ci * vi for ci, vi in zip(c, values))

    difference = sympy.expand(f([ai**n for ai in a]) - f(a) ** n)
    equations = sympy.Poly(difference, *a).coeffs()

    found = [np.zeros((1, m), dtype=complex)]
    for size in range(1, m + 1):
        for support in itertools.combinations(range(m), size):
            zeros = {c[j]: 0 for j in range(m) if j not in support}
            reduced = [sympy.expand(eq.subs(zeros)) for eq in equations]
            reduced = [eq for eq in reduced if eq != 0]
            if any(len(sympy.Poly(eq, *[c[i] for i in support]).terms()) == 1 for eq in reduced):
                continue
            unknowns = [c[i] for i in support]
            for solution in sympy.solve(reduced, unknowns, dict=True):
                values = [complex(sympy.N(solution.get(u, u))) for u in unknowns]
                if any(abs(v) <= ALGEBRA_TOL for v in values):
                    continue
                row = np.zeros((1, m), dtype=complex)
                row[0, list(support)] = values
                found.append(row)

    def order(row):
        nz = np.nonzero(np.abs(row[0]) > ALGEBRA_TOL)[0]
        lead = row[0, nz[0]] if nz.size else 0
        return (len(nz), tuple(nz), round(complex(lead).real, 9), round(complex(lead).imag, 9))

    found.sort(key=order)
    return [LinearMapC(row) for row in found]


def functional_report(m: int, n: int) -> FunctionalReport:
    functionals = classify_njordan_functionals(m, n)
    return FunctionalReport(m=m, n=n, count=len(functionals), functionals=[f.label() for f in functionals])


## Norms and sampled hypotheses

def op_norm_sup(h: LinearMapC) -> float:
    """Induced sup -> sup norm: the largest l1 norm of a row."""
    if h.matrix.size == 0:
        return 0.0
    return float(np.linalg.norm(h.matrix, np.inf))


def _close(lhs: np.ndarray, rhs: np.ndarray, tol: float) -> np.ndarray:
    """Per-sample verdict: every entry within tol, relative to the size of the right side."""
    return np.all(np.abs(lhs - rhs) <= tol * (1.0 + np.abs(rhs)), axis=-1)


def jordan_on_samples(h: LinearMapC, n: int, samples: np.ndarray, tol: float | None = None) -> tuple[bool, int | None]:
    tol = h.tol if tol is None else tol
    ok = _close(h(samples**n), h(samples) ** n, tol)
    if ok.all():
        return True, None
    return False, int(np.argmin(ok))


def step2_reduction_check(
    h: LinearMapC,
    n: int,
    samples: int = DEFAULT_SAMPLES,
    seed_value: int = 0,
) -> bool:
    """h is n-Jordan iff every coordinate character composed with h is n-Jordan (same samples)."""
    points = DiagAlgebra(h.domain_dim).random_elements(samples, seed_value)
    whole, _ = jordan_on_samples(h, n, points)
    parts = all(jordan_on_samples(part, n, points)[0] for part in h.components())
    return whole == parts


def _witness(points: np.ndarray, idx: int | None) -> list[str] | None:
    return None if idx is None else [format_complex(z) for z in points[idx]]


def check_corollary_2_6(
    m: int,
    k: int,
    samples: int = DEFAULT_SAMPLES,
    seed_value: int = 0,
    extra_maps: list[LinearMapC] | None = None,
    unsafe_override: bool = False,
) -> Corollary26Report:
    if (m > 4 or k > 4) and not unsafe_override:
        raise GuardError(f"Corollary check is limited to m, k <= 4, got m={m}, k={k}")
    real = [f for f in classify_njordan_functionals(m, 3) if f.is_real()]
    points = DiagAlgebra(m).random_elements(samples, seed_value)

    candidates = [
        LinearMapC(np.vstack([f.matrix for f in combo]))
        for combo in itertools.product(real, repeat=k)
    ]
    rejected: list[RejectedMap] = []
    for extra in extra_maps or []:
        ok, idx = jordan_on_samples(extra, 3, points)
        if not ok:
            rejected.append(RejectedMap(map=extra.label(), reason="not 3-Jordan", witness=_witness(points, idx)))
        elif not extra.is_real():
            rejected.append(RejectedMap(map=extra.label(), reason="not involution preserving"))
        else:
            candidates.append(extra)

    norms = []
    violations = []
    for h in candidates:
        ok, idx = jordan_on_samples(h, 3, points)
        if not ok:
            rejected.append(RejectedMap(map=h.label(), reason="not 3-Jordan", witness=_witness(points, idx)))
            continue
        norm = op_norm_sup(h)
        norms.append(norm)
        if norm > 1.0:
            violations.append(h.label())
    report = Corollary26Report(
        m=m,
        k=k,
        functionals_per_component=len(real),
        maps_checked=len(norms),
        max_norm=max(norms, default=0.0),
        rejected=rejected,
        violations=violations,
        samples=samples,
        seed=seed_value,
    )
    if violations:
        raise ContractivityViolation(f"Involution preserving 3-Jordan maps with norm above 1: {', '.join(violations)}")
    return report


def check_theorem_2_7(
    h: LinearMapC,
    k: int,
    samples: int = DEFAULT_SAMPLES,
    seed_value: int = 0,
) -> Theorem27Report:
    if k < 1:
        raise ValueError(f"Power parameter must be at least 1, got {k}")
    points = DiagAlgebra(h.domain_dim).random_elements(samples, seed_value)
    images = h(points)

    checks = {
        f"{k}-Jordan": _close(h(points**k), images**k, h.tol),
        "involution preserving": _close(h(np.conj(points)), np.conj(images), h.tol),
        "h(a*a) = h(a)*h(a)": _close(h(np.conj(points) * points), np.conj(images) * images, h.tol),
    }
    filters = []
    admitted = True
    for name, ok in checks.items():
        passed = bool(ok.all())
        admitted &= passed
        filters.append(FilterVerdict(
            hypothesis=name,
            passed=passed,
            witness=None if passed else _witness(points, int(np.argmin(ok))),
        ))

    report = Theorem27Report(map=h.label(), k=k, admitted=admitted, filters=filters, samples=samples, seed=seed_value)
    if not admitted:
        logger.info("%s excluded by the hypothesis filters", h.label())
        return report

    norm = op_norm_sup(h)
    power = 4 * k + 2
    lhs = DiagAlgebra(h.codomain_dim).norm(images) ** power
    rhs = norm**4 * DiagAlgebra(h.domain_dim).norm(points) ** power
    slack = rhs - lhs
    report.norm = norm
    report.min_slack = float(slack.min())
    report.max_slack = float(slack.max())
    if norm > 1.0 + h.tol:
        raise ContractivityViolation(f"{h.label()} passes every hypothesis but has norm {norm}")
    if report.min_slack < -h.tol * (1.0 + float(np.max(rhs))):
        raise ContractivityViolation(f"{h.label()} breaks the norm chain by {-report.min_slack}")
    return report


def step2_batch(count: int = 1000, n: int = 3, samples: int = DEFAULT_SAMPLES, seed_value: int = 0) -> Step2Report:
    """step2_reduction_check on seeded random maps C^m -> C^k (m, k in 1..3).

    Every fourth map is assembled from n-Jordan functionals so both verdicts occur.
    """
    rng = np.random.default_rng(seed_value)
    functionals = {m: classify_njordan_functionals(m, n) for m in (1, 2, 3)}
    agreed = jordan_maps = 0
    for i in range(count):
        m, k = (int(v) for v in rng.integers(1, 4, size=2))
        if i % 4 == 0:
            picks = rng.integers(0, len(functionals[m]), size=k)
            h = LinearMapC(np.vstack([functionals[m][int(p)].matrix for p in picks]))
        else:
            h = LinearMapC(rng.standard_normal((k, m)) + 1j * rng.standard_normal((k, m)))
        points = DiagAlgebra(m).random_elements(samples, seed_value + i)
        jordan_maps += int(jordan_on_samples(h, n, points)[0])
        agreed += int(step2_reduction_check(h, n, samples, seed_value + i))
    return Step2Report(maps=count, n=n, agreed=agreed, jordan_maps=jordan_maps, samples=samples, seed=seed_value)
