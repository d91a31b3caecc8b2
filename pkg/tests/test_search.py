import pytest

from njordan.errors import ModelError
from njordan.models import AdditiveMap, make_zm
from njordan.models.additive import map_batches
from njordan.models.predicates import is_n_jordan
from njordan.models.search import predicate_mask, search


def coords(maps):
    return [h.coordinates() for h in maps]


def test_negation_is_the_only_3_jordan_non_jordan_map(z5):
    found = search(z5, z5, 3, "njordan_not_jordan")
    assert coords(found) == [[4]]
    assert found[0].label() == "map#4"


def test_3_jordan_maps_on_z5(z5):
    assert coords(search(z5, z5, 3, "njordan")) == [[0], [1], [4]]


def test_no_3_jordan_non_ring_maps_on_z5x5(z5x5):
    assert search(z5x5, z5x5, 3, "jordan_not_ring") == []


def test_transpose_is_found_as_jordan_not_ring(m2z2, transpose):
    found = search(m2z2, m2z2, 2, "jordan_not_ring")
    assert transpose.coordinates() in coords(found)


def test_limit(z5x5):
    assert len(search(z5x5, z5x5, 2, "nring", limit=3)) == 3


@pytest.mark.parametrize("threads", [2, 5])
def test_threads_do_not_change_results(m2z2, threads):
    single = search(m2z2, m2z2, 2, "jordan_not_ring", batch=512)
    parallel = search(m2z2, m2z2, 2, "jordan_not_ring", batch=512, threads=threads)
    assert coords(single) == coords(parallel)


def test_sampled_search_is_seeded(m2z2):
    first = search(m2z2, m2z2, 2, "njordan", sample=3000, seed_value=7)
    again = search(m2z2, m2z2, 2, "njordan", sample=3000, seed_value=7, threads=3)
    assert coords(first) == coords(again)
    assert all(h.name.startswith("sample#") for h in first)


def test_callable_predicate_agrees_with_builtin(z5x5):
    by_name = search(z5x5, make_zm(5), 3, "njordan")
    by_callable = search(z5x5, make_zm(5), 3, lambda h: is_n_jordan(h, 3)[0])
    assert coords(by_name) == coords(by_callable)
    assert len(by_name) == 5


def test_unknown_predicate(z5):
    _, matrices = next(map_batches(z5, z5))
    with pytest.raises(ValueError):
        predicate_mask("bijective", z5, z5, matrices, 2)


def test_map_needs_shared_modulus(z5):
    with pytest.raises(ModelError):
        AdditiveMap(z5, make_zm(2), [[1]])
