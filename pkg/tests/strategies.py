from hypothesis import strategies as st

from njordan.freealg import FreePoly, Mode

"""
Hypothesis strategies for small polynomials and linear substitutions
"""

words = st.lists(st.integers(min_value=0, max_value=2), min_size=0, max_size=3).map(tuple)
coefficients = st.fractions(min_value=-3, max_value=3, max_denominator=4)


def polys(mode: Mode = Mode.NONCOMMUTATIVE, max_terms: int = 4):
    return st.dictionaries(words, coefficients, max_size=max_terms).map(lambda d: FreePoly.from_dict(d, mode))


def linear_forms(variables=(0, 1, 2), bound: int = 2):
    return st.dictionaries(
        st.sampled_from(variables), st.integers(min_value=-bound, max_value=bound), min_size=1, max_size=len(variables)
    ).filter(lambda form: any(form.values()))
