import re

from njordan.errors import ModelError
from njordan.models.constructors import (
    function_ring,
    make_zm,
    matrix_ring,
    power_ring,
    strict_upper,
    upper_triangular,
)
from njordan.models.ring import FiniteRing

"""
This file is used to build a ring from a catalog name
It is used by the search and examples commands to turn --domain / --codomain into a FiniteRing

    zm:5            Z5
    zm:5^2          Z5 x Z5
    mat:2x2@2       M2(Z2)
    upper:4@2       strictly upper triangular 4x4 over Z2
    tri:3@5         upper triangular 3x3 over Z5
    fun:upper:4@2,pts:3   functions from 3 points into upper:4@2
"""

_ZM = re.compile(r"zm:(\d+)(?:\^(\d+))?")
_MAT = re.compile(r"mat:(\d+)x(\d+)@(\d+)")
_UPPER = re.compile(r"upper:(\d+)@(\d+)")
_TRI = re.compile(r"tri:(\d+)@(\d+)")
_FUN = re.compile(r"fun:(.+),pts:(\d+)")


def get_ring(name: str, unsafe_override: bool = False) -> FiniteRing:
    name = name.strip()

    if match := _FUN.fullmatch(name):
        inner, points = match.groups()
        return function_ring(get_ring(inner, unsafe_override), int(points), unsafe_override)

    elif match := _ZM.fullmatch(name):
        m, copies = int(match.group(1)), int(match.group(2) or 1)
        if copies < 1:
            raise ModelError(f"Ring {name!r} needs at least one factor")
        return power_ring(make_zm(m, unsafe_override), copies)

    elif match := _MAT.fullmatch(name):
        rows, cols, m = (int(g) for g in match.groups())
        if rows != cols:
            raise ModelError(f"Ring {name!r}: only square matrix rings are supported")
        return matrix_ring(rows, m, unsafe_override)

    elif match := _UPPER.fullmatch(name):
        k, m = (int(g) for g in match.groups())
        return strict_upper(k, m, unsafe_override)

    elif match := _TRI.fullmatch(name):
        k, m = (int(g) for g in match.groups())
        return upper_triangular(k, m, unsafe_override)

    else:
        raise ModelError(f"Unsupported ring {name!r}")
