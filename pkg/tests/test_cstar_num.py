import numpy as np
import pytest

from njordan.errors import ContractivityViolation, GuardError
from njordan.services.cstar_num import (
    DiagAlgebra,
    LinearMapC,
    check_corollary_2_6,
    check_theorem_2_7,
    classify_njordan_functionals,
    jordan_on_samples,
    op_norm_sup,
    step2_batch,
    step2_reduction_check,
)
from njordan.commands.norm import injected_map, parse_map


def test_c_star_identity_holds():
    algebra = DiagAlgebra(3)
    points = algebra.random_elements(100, seed_value=0)
    assert np.all(algebra.c_star_defect(points) < 1e-12)


def test_random_elements_are_seeded():
    algebra = DiagAlgebra(2)
    assert np.array_equal(algebra.random_elements(5, 1), algebra.random_elements(5, 1))


@pytest.mark.parametrize(("m", "n", "count"), [(1, 2, 2), (2, 2, 3), (2, 3, 5), (2, 4, 7), (3, 3, 7)])
def test_functional_counts(m, n, count):
    assert len(classify_njordan_functionals(m, n)) == count


def test_functional_order():
    labels = [f.label() for f in classify_njordan_functionals(2, 3)]
    assert labels == ["[0, 0]", "[-1, 0]", "[1, 0]", "[0, -1]", "[0, 1]"]


def test_classification_guard():
    with pytest.raises(GuardError):
        classify_njordan_functionals(2, 5)
    with pytest.raises(GuardError):
        classify_njordan_functionals(7, 2)


def test_operator_norm():
    assert op_norm_sup(LinearMapC([[1, -1], [0.5, 0]])) == 2.0
    assert op_norm_sup(LinearMapC(np.eye(3))) == 1.0


def test_jordan_on_samples():
    points = DiagAlgebra(2).random_elements(64, 0)
    assert jordan_on_samples(LinearMapC([[-1, 0]]), 3, points) == (True, None)
    ok, idx = jordan_on_samples(LinearMapC([[1, 1]]), 3, points)
    assert not ok and idx == 0


@pytest.mark.parametrize("m", [1, 2, 3])
@pytest.mark.parametrize("k", [1, 2, 3])
def test_corollary_maps_are_contractive(m, k):
    report = check_corollary_2_6(m, k, samples=64)
    assert report.functionals_per_component == 2 * m + 1
    assert report.maps_checked == (2 * m + 1) ** k
    assert report.max_norm <= 1.0
    assert report.violations == []


def test_corollary_rejects_injected_map():
    extra = injected_map(2, 2)
    report = check_corollary_2_6(2, 2, samples=64, extra_maps=[extra])
    assert [r.map for r in report.rejected] == ["injected 2*a1"]
    assert report.rejected[0].reason == "not 3-Jordan"
    assert report.maps_checked == 25


@pytest.mark.parametrize("k", [1, 2, 3])
def test_theorem_2_7_on_coordinate_homomorphisms(k):
    for matrix in (np.eye(3), np.array([[0, 0, 1], [1, 0, 0], [1, 0, 0]])):
        report = check_theorem_2_7(LinearMapC(matrix), k, samples=64)
        assert report.admitted
        assert report.norm <= 1.0 + 1e-9
        assert report.min_slack >= -1e-9


def test_theorem_2_7_filters_scaled_identity():
    report = check_theorem_2_7(LinearMapC(0.5 * np.eye(3)), 1, samples=64)
    assert not report.admitted
    verdicts = {f.hypothesis: f.passed for f in report.filters}
    assert verdicts == {"1-Jordan": True, "involution preserving": True, "h(a*a) = h(a)*h(a)": False}
    assert report.norm is None


def test_theorem_2_7_norm_violation_is_raised():
    loose = LinearMapC([[3]], tol=1.5)
    with pytest.raises(ContractivityViolation):
        check_theorem_2_7(loose, 1, samples=16)


def test_step2_reduction():
    assert step2_reduction_check(LinearMapC([[1, 0], [0, -1]]), 3)
    assert step2_reduction_check(LinearMapC([[1, 1], [0, 1]]), 3)
    report = step2_batch(count=1000, n=3, samples=32, seed_value=0)
    assert report.agreed == report.maps == 1000
    assert 0 < report.jordan_maps < 1000


def test_parse_map():
    h = parse_map("1,0;0,0.5i")
    assert h.matrix.shape == (2, 2)
    assert h.matrix[1, 1] == 0.5j
    with pytest.raises(ValueError):
        parse_map("1,0;1")
