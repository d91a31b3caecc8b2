from fractions import Fraction

import pytest
from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st
from sympy import primefactors

from njordan.errors import DenominatorError, GuardError, ModeMismatchError, ModelError
from njordan.freealg import Mode, parse_expr
from njordan.models import AdditiveMap, make_zm, product
from njordan.models.search import search
from njordan.services.identities import (
    combine,
    evaluate,
    find_violation,
    format_identity,
    parse_identity,
    seed,
    substitute,
    trivial,
)

NC = Mode.NONCOMMUTATIVE
C = Mode.COMMUTATIVE


def test_seed_text():
    assert format_identity(seed(3)) == "h(a^3) = H(a)^3"
    with pytest.raises(ValueError):
        seed(1)


def test_substitution_instance():
    inst = substitute(seed(2, C), {"a": "x+y"})
    assert inst.lhs == parse_expr("x^2 + 2*x*y + y^2", C)
    assert format_identity(inst) == "h(x^2 + 2*x*y + y^2) = H(x)^2 + 2*H(x)*H(y) + H(y)^2"


def test_combine_tracks_denominators():
    assert combine([(Fraction(1, 2), seed(2))]).denominators == {2}
    assert combine([(Fraction(1, 6), seed(2)), (3, seed(3))]).denominators == {2, 3}
    assert combine([(4, seed(2))]).denominators == frozenset()


def test_combine_errors():
    with pytest.raises(ValueError):
        combine([])
    with pytest.raises(ModeMismatchError):
        combine([(1, seed(2, NC)), (1, seed(2, C))])


def test_difference_with_itself_is_trivial():
    assert combine([(1, seed(3)), (-1, seed(3))]).same_statement(trivial())


def test_identity_text_round_trip():
    text = "h(2*x*y*z + y*x*z) = 3*H(x)*H(y)*H(z)"
    identity = parse_identity(text)
    assert format_identity(identity) == text
    assert parse_identity(format_identity(identity)).same_statement(identity)


## Evaluation on finite models

def test_negation_satisfies_odd_seed_only(negation):
    assert evaluate(seed(3), negation)
    assert not evaluate(seed(2), negation)
    violation = find_violation(seed(2), negation)
    assert violation is not None and set(violation) == {"a"}


def test_ring_identity_fails_for_negation(negation):
    assert evaluate(parse_identity("h(x*y*z) = H(x)*H(y)*H(z)", C), negation)
    assert not evaluate(parse_identity("h(x*y) = H(x)*H(y)", C), negation)


def test_denominator_not_invertible(z5):
    identity = combine([(Fraction(1, 5), seed(2))])
    with pytest.raises(DenominatorError):
        evaluate(identity, AdditiveMap(z5, z5, [[1]]))


def test_commutative_identity_on_matrix_ring(m2z2):
    h = AdditiveMap(m2z2, make_zm(2), [[1, 0, 0, 1]])
    with pytest.raises(ModelError):
        evaluate(parse_identity("h(x*y) = H(x)*H(y)", C), h)


def test_noncommutative_codomain_is_rejected(m2z2, transpose):
    with pytest.raises(ModelError):
        evaluate(seed(2), transpose)


def test_assignment_guard_and_sampling(m2z5):
    zero = AdditiveMap(m2z5, make_zm(5), [[0, 0, 0, 0]])
    identity = parse_identity("h(x*y*z*w) = H(x)*H(y)*H(z)*H(w)")
    with pytest.raises(GuardError):
        evaluate(identity, zero)
    assert evaluate(identity, zero, samples=200, seed_value=0)


def test_only_zero_map_is_3_jordan_on_m2z5(m2z5):
    found = search(m2z5, make_zm(5), 3, "njordan")
    assert [h.coordinates() for h in found] == [[0, 0, 0, 0]]


## Soundness: every derived identity holds on verified 3-Jordan maps

@pytest.fixture(scope="module")
def three_jordan_maps(z5, z5x5, m2z5):
    maps = search(z5x5, z5, 3, "njordan")
    maps += search(z5x5, z5x5, 3, "njordan", limit=10)
    maps += [AdditiveMap(z5, z5, [[4]]), AdditiveMap(m2z5, z5, [[0, 0, 0, 0]])]
    return maps


@pytest.fixture(scope="module")
def three_jordan_maps_mod7():
    z7 = make_zm(7)
    z7x7 = product(z7, z7)
    maps = search(z7x7, z7, 3, "njordan")
    maps += search(z7x7, z7x7, 3, "njordan", limit=10)
    return maps


linear = st.dictionaries(
    st.sampled_from(["x", "y", "z"]), st.integers(min_value=-2, max_value=2), min_size=1, max_size=3
).filter(lambda form: any(form.values()))


def chain_steps(denominators):
    scalars = st.builds(Fraction, st.integers(min_value=-3, max_value=3), st.sampled_from(denominators))
    return st.lists(
        st.one_of(
            st.tuples(st.just("subst"), st.sampled_from(["a", "x", "y", "z"]), linear),
            st.tuples(st.just("combine"), scalars, scalars),
        ),
        min_size=1,
        max_size=8,
    )


def derive(steps):
    """Run a chain from seed(3); returns the identity and the primes of every nonzero scalar used."""
    pool = [seed(3)]
    primes = set()
    for step in steps:
        if step[0] == "subst":
            _, var, form = step
            pool.append(substitute(pool[-1], {var: form}))
        else:
            _, c1, c2 = step
            primes |= {int(p) for c in (c1, c2) if c for p in primefactors(c.denominator)}
            pool.append(combine([(c1, pool[-1]), (c2, pool[len(pool) // 2])]))
    return pool[-1], primes


@settings(max_examples=100, deadline=None, suppress_health_check=[HealthCheck.function_scoped_fixture])
@given(chain_steps([1, 2, 3]))
def test_random_derivation_chains_hold_on_models(three_jordan_maps, steps):
    derived, primes = derive(steps)
    assert derived.denominators == primes
    for h in three_jordan_maps:
        assert evaluate(derived, h, samples=300, seed_value=0), (format_identity(derived), h.label())


@settings(max_examples=100, deadline=None, suppress_health_check=[HealthCheck.function_scoped_fixture])
@given(chain_steps([1, 2, 3, 5]))
def test_random_derivation_chains_hold_on_mod7_models(three_jordan_maps_mod7, steps):
    derived, primes = derive(steps)
    assert derived.denominators == primes
    for h in three_jordan_maps_mod7:
        assert evaluate(derived, h, samples=300, seed_value=0), (format_identity(derived), h.label())


def test_parsed_coefficients_record_their_primes():
    identity = parse_identity("h(1/6*x*y*z) = 1/6*H(x)*H(y)*H(z)", C)
    assert identity.denominators == {2, 3}
    assert parse_identity("h(x*y) = H(x)*H(y)").denominators == frozenset()
