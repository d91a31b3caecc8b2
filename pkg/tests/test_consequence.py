import pytest

from njordan.errors import DenominatorError, GuardError, ModeMismatchError
from njordan.freealg import Mode, var_ids
from njordan.services.certificates import verify_certificate
from njordan.services.consequence import (
    coefficient_vectors,
    consequence_check,
    generate_instances,
    permutation_instances,
    premise_instances,
    solve_span,
    symmetry_obstruction,
)
from njordan.services.identities import parse_identity, seed
from njordan.services.linalg import Field
from njordan.services.scripts import PRINTED_11, PRINTED_15

NC = Mode.NONCOMMUTATIVE
C = Mode.COMMUTATIVE
XYZ = var_ids("x,y,z")
TARGET_3 = "h(x*y*z) = H(x)*H(y)*H(z)"


def test_coefficient_vectors_pick_one_of_each_sign_pair():
    assert coefficient_vectors(1, 1) == [(-1,)]
    vectors = coefficient_vectors(2, 1)
    assert vectors == [(-1, -1), (-1, 0), (-1, 1), (0, -1)]
    assert len(coefficient_vectors(3, 2)) == (5**3 - 1) // 2


def test_generate_instances_count():
    assert len(generate_instances(3, XYZ, 1)) == 13
    assert all(inst.is_homogeneous(3) for inst in generate_instances(3, XYZ, 1, C))


def test_commutative_target_is_in_span():
    target = parse_identity(TARGET_3, C)
    result = consequence_check(3, target, XYZ, 1)
    assert result.verdict == "InSpan"
    assert result.certificate.field == "Q"
    assert result.certificate.mode == "c"
    assert verify_certificate(result.certificate, target)


def test_noncommutative_target_is_blocked_by_symmetry():
    target = parse_identity(TARGET_3, NC)
    result = consequence_check(3, target, XYZ, 1)
    assert result.verdict == "NotInSpan"
    assert result.certificate is None
    assert result.rank > 0
    assert "constant on words of equal content" in result.symmetry_obstruction


def test_noncommutative_target_with_printed_premises():
    target = parse_identity(TARGET_3, NC)
    premises = [parse_identity(PRINTED_11, NC), parse_identity(PRINTED_15, NC)]
    result = consequence_check(3, target, XYZ, 1, premises=premises)
    assert result.verdict == "InSpan"
    assert result.certificate.premises == [
        "h(2*x*y*z + y*x*z + 2*y*z*x + z*x*y) = 6*H(x)*H(y)*H(z)",
        "h(-x*z*y + y*x*z) = 0",
    ]
    assert any(inst.source.startswith("premise:") for inst in result.certificate.instances)
    assert verify_certificate(result.certificate)


def test_jordan_is_not_multiplicative_on_noncommutative_domain():
    target = parse_identity("h(x*y) = H(x)*H(y)", NC)
    result = consequence_check(2, target, XYZ, 2)
    assert result.verdict == "NotInSpan"
    assert result.rank > 0
    assert result.residual is not None


def test_jordan_is_multiplicative_on_commutative_domain():
    target = parse_identity("h(x*y) = H(x)*H(y)", C)
    result = consequence_check(2, target, var_ids("x,y"), 1)
    assert result.verdict == "InSpan"
    assert verify_certificate(result.certificate)


def test_finite_field_certificates():
    target = parse_identity(TARGET_3, C)
    over_gf5 = consequence_check(3, target, XYZ, 1, field="GF(5)")
    assert over_gf5.verdict == "InSpan"
    assert over_gf5.certificate.field == "GF(5)"
    assert verify_certificate(over_gf5.certificate)
    assert consequence_check(3, target, XYZ, 1, field="GF(3)").verdict == "NotInSpan"


def test_consequence_guards():
    target = parse_identity("h(x*y) = H(x)*H(y)", C)
    with pytest.raises(GuardError):
        consequence_check(2, target, var_ids("x,y,z,w,t"), 1)
    with pytest.raises(GuardError):
        consequence_check(2, target, XYZ, 3)
    with pytest.raises(ValueError):
        consequence_check(3, target, XYZ, 1)


def test_premise_mode_must_match():
    target = parse_identity(TARGET_3, C)
    with pytest.raises(ModeMismatchError):
        consequence_check(3, target, XYZ, 1, premises=[parse_identity(PRINTED_15, NC)])


def test_seed_is_in_its_own_span():
    result = solve_span([seed(3)], seed(3))
    assert result.coefficients == [1]


def test_solve_span_over_gf_p():
    generators = [parse_identity("h(x) = H(x)"), parse_identity("h(y) = H(y)")]
    result = solve_span(generators, parse_identity("h(3*x + y) = 3*H(x) + H(y)"), Field.parse("GF(7)"))
    assert result.coefficients == [3, 1]


def test_premise_instances_include_collapses():
    premise = parse_identity("h(x*y - y*x) = 0")
    instances = premise_instances(premise, var_ids("x,y"), 0)
    assert {inst.source for inst in instances} == {"premise:0"}
    assert len(instances) == 2


def test_permutation_instances():
    assert len(permutation_instances(parse_identity(TARGET_3))) == 6
    assert len(permutation_instances(parse_identity("h(x*y + y*x) = 2*H(x)*H(y)"))) == 1


def test_symmetry_obstruction_names_words():
    message = symmetry_obstruction(parse_identity(TARGET_3))
    assert message.startswith("coefficient of x*y*z is 1 but coefficient of x*z*y is 0")
    assert symmetry_obstruction(parse_identity("h(x*y + y*x) = 2*H(x)*H(y)")) is None
    assert symmetry_obstruction(parse_identity(TARGET_3, C)) is None


def test_premise_dividing_by_p_is_a_denominator_error():
    premise = parse_identity("h(1/5*x*y*z) = 1/5*H(x)*H(y)*H(z)", C)
    assert premise.denominators == {5}
    target = parse_identity(TARGET_3, C)
    with pytest.raises(DenominatorError):
        consequence_check(3, target, XYZ, 1, field="GF(5)", premises=[premise])
    assert consequence_check(3, target, XYZ, 1, field="GF(7)", premises=[premise]).in_span


def test_target_dividing_by_p_is_a_denominator_error():
    target = parse_identity("h(1/5*x*y*z) = 1/5*H(x)*H(y)*H(z)", C)
    with pytest.raises(DenominatorError):
        solve_span(generate_instances(3, XYZ, 1, C), target, Field.parse("GF(5)"))


@pytest.mark.parametrize("text, prime", [("Q", None), ("GF(7)", 7), ("13", 13), ("GF(2)", 2)])
def test_field_parse(text, prime):
    assert Field.parse(text).prime == prime


@pytest.mark.parametrize("text", ["GF(1)", "GF(9)", "GF(91)", "R"])
def test_field_parse_rejects_non_primes(text):
    with pytest.raises(ValueError):
        Field.parse(text)
