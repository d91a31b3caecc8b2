from njordan.models.catalog import get_ring
from njordan.models.constructors import (
    function_ring,
    make_zm,
    matrix_ring,
    product,
    strict_upper,
    upper_triangular,
)
from njordan.models.ring import AdditiveMap, FiniteRing
