"""Shared hypothesis strategies."""
from fractions import Fraction

from hypothesis import strategies as st

from ucelab.exact import LaurentPoly, ParamPoly

rationals = st.fractions(min_value=-5, max_value=5, max_denominator=6)

param_polys = st.lists(rationals, max_size=4).map(ParamPoly)

laurent_polys = st.dictionaries(st.integers(-4, 4), param_polys, max_size=4).map(
    lambda d: sum((LaurentPoly.monomial(e, c) for e, c in d.items()), LaurentPoly())
)

small_fraction = st.fractions(min_value=-3, max_value=3, max_denominator=5).filter(lambda q: q != Fraction(0))
