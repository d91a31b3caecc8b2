from fractions import Fraction

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from njordan.errors import CertificateFormatError, DenominatorError
from njordan.freealg import Mode, var_ids
from njordan.schema.certificate import Certificate, CertificateInstance
from njordan.services.certificates import certificate_combination, reduce_certificate, verify_certificate
from njordan.services.consequence import consequence_check, generate_instances
from njordan.services.identities import combine, parse_identity
from njordan.services.persistence import load_certificate, save_certificate

C = Mode.COMMUTATIVE


@pytest.fixture(scope="module")
def cert_n3():
    target = parse_identity("h(x*y*z) = H(x)*H(y)*H(z)", C)
    return consequence_check(3, target, var_ids("x,y,z"), 1).certificate


@pytest.fixture(scope="module")
def cert_n2():
    target = parse_identity("h(x*y) = H(x)*H(y)", C)
    return consequence_check(2, target, var_ids("x,y"), 1).certificate


def tampered(cert: Certificate) -> Certificate:
    first = cert.instances[0]
    doubled = str(2 * Fraction(first.coeff))
    return cert.model_copy(update={"instances": [first.model_copy(update={"coeff": doubled})] + cert.instances[1:]})


def test_fresh_certificate_is_valid(cert_n3):
    assert cert_n3.n == 3
    assert all(inst.source == "seed" for inst in cert_n3.instances)
    assert verify_certificate(cert_n3)


def test_combination_reproduces_target(cert_n3):
    combined = certificate_combination(cert_n3)
    assert combined.same_statement(parse_identity(cert_n3.target, C))


def test_tampered_coefficient_is_invalid(cert_n3):
    assert not verify_certificate(tampered(cert_n3))


def test_wrong_target_is_invalid(cert_n3):
    other = cert_n3.model_copy(update={"target": "h(x*y*z) = 2*H(x)*H(y)*H(z)"})
    assert not verify_certificate(other)


def test_reduce_to_gf_p():
    cert = Certificate(
        n=2,
        mode="c",
        field="Q",
        target="h(x*y) = H(x)*H(y)",
        instances=[
            CertificateInstance(subst={"a": "x + y"}, coeff="1/2"),
            CertificateInstance(subst={"a": "x"}, coeff="-1/2"),
            CertificateInstance(subst={"a": "y"}, coeff="-1/2"),
        ],
    )
    assert verify_certificate(cert)
    reduced = reduce_certificate(cert, 3)
    assert reduced.field == "GF(3)"
    assert [inst.coeff for inst in reduced.instances] == ["2", "1", "1"]
    assert verify_certificate(reduced)
    with pytest.raises(DenominatorError):
        reduce_certificate(cert, 2)


def test_solver_certificate_needs_two_inverted(cert_n2):
    with pytest.raises(DenominatorError):
        reduce_certificate(cert_n2, 2)


def test_save_and_load(tmp_path, cert_n3):
    path = save_certificate(cert_n3, tmp_path / "cert.json")
    assert load_certificate(path) == cert_n3
    assert path.read_text().startswith("{\n  \"n\": 3,")


def test_truncated_file(tmp_path, cert_n3):
    path = save_certificate(cert_n3, tmp_path / "cert.json")
    path.write_text(path.read_text()[:40])
    with pytest.raises(CertificateFormatError, match="not valid JSON"):
        load_certificate(path)


def test_missing_file(tmp_path):
    with pytest.raises(CertificateFormatError):
        load_certificate(tmp_path / "absent.json")


def test_schema_violation(tmp_path):
    path = tmp_path / "cert.json"
    path.write_text('{"n": 1, "mode": "nc", "field": "Q", "target": "h(x) = H(x)"}')
    with pytest.raises(CertificateFormatError, match="not a certificate"):
        load_certificate(path)


def test_unknown_source_is_rejected():
    with pytest.raises(ValueError):
        CertificateInstance(subst={"a": "x"}, coeff="1", source="axiom")


def test_premise_index_out_of_range():
    cert = Certificate(
        n=2,
        mode="c",
        field="Q",
        target="h(x^2) = H(x)^2",
        instances=[CertificateInstance(subst={"x": "x"}, coeff="1", source="premise:0")],
    )
    with pytest.raises(CertificateFormatError):
        verify_certificate(cert)


def test_empty_certificate_proves_only_the_trivial_identity():
    cert = Certificate(n=2, mode="nc", field="Q", target="h(0) = 0")
    assert verify_certificate(cert)


@pytest.mark.parametrize("p", [5, 7])
def test_solver_certificate_reduces_to_gf_p(cert_n3, p):
    reduced = reduce_certificate(cert_n3, p)
    assert reduced.field == f"GF({p})"
    assert all(Fraction(inst.coeff).denominator == 1 for inst in reduced.instances)
    assert verify_certificate(reduced)


## Solver and verifier agree on targets built from the instances themselves

scalars = st.builds(Fraction, st.integers(min_value=-4, max_value=4), st.sampled_from([1, 2, 3, 5]))


@pytest.mark.parametrize("mode", [Mode.NONCOMMUTATIVE, C])
@settings(max_examples=50, deadline=None)
@given(data=st.data())
def test_random_combinations_are_certified(mode, data):
    instances = generate_instances(3, var_ids("x,y,z"), 1, mode)
    coeffs = data.draw(st.lists(scalars, min_size=len(instances), max_size=len(instances)))
    target = combine(list(zip(coeffs, instances))) if any(coeffs) else None
    assume(target is not None and not target.is_trivial())

    result = consequence_check(3, target, var_ids("x,y,z"), 1)
    assert result.in_span
    assert verify_certificate(result.certificate)
    assert verify_certificate(result.certificate, target)
    assert certificate_combination(result.certificate).same_statement(target)
