from njordan.freealg.poly import (
    CommPoly,
    FreePoly,
    Mode,
    Scalar,
    Word,
    abelianize,
    add,
    as_scalar,
    exponents,
    format_poly,
    mul,
    scalar_mul,
)
from njordan.freealg.parser import parse_expr, parse_identity_parts, parse_rhs
from njordan.freealg.substitution import SubstitutionSpec, linear_form, substitute_linear
from njordan.freealg.variables import ALPHABET, SEED_VARIABLE, var_id, var_ids, var_name

__all__ = [
    "ALPHABET",
    "CommPoly",
    "FreePoly",
    "Mode",
    "SEED_VARIABLE",
    "Scalar",
    "SubstitutionSpec",
    "Word",
    "abelianize",
    "add",
    "as_scalar",
    "exponents",
    "format_poly",
    "linear_form",
    "mul",
    "parse_expr",
    "parse_identity_parts",
    "parse_rhs",
    "scalar_mul",
    "substitute_linear",
    "var_id",
    "var_ids",
    "var_name",
]
