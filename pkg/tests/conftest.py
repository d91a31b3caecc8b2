import pytest

from njordan.models import AdditiveMap, make_zm, matrix_ring, product, strict_upper

"""
Shared rings and maps for the test suite
"""


@pytest.fixture(scope="session")
def z5():
    return make_zm(5)


@pytest.fixture(scope="session")
def z5x5():
    return product(make_zm(5), make_zm(5))


@pytest.fixture(scope="session")
def m2z2():
    return matrix_ring(2, 2)


@pytest.fixture(scope="session")
def m2z5():
    return matrix_ring(2, 5)


@pytest.fixture(scope="session")
def n4z2():
    return strict_upper(4, 2)


@pytest.fixture(scope="session")
def negation(z5):
    return AdditiveMap(z5, z5, [[4]], name="negation")


@pytest.fixture(scope="session")
def transpose(m2z2):
    return AdditiveMap(m2z2, m2z2, m2z2.involution, name="transpose")
