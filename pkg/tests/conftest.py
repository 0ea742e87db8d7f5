from fractions import Fraction

import hypothesis.strategies as st

from ncres.rational import CoeffPoly, GaussianRational, RationalFn, XiPoly

fractions_st = st.fractions(min_value=-5, max_value=5, max_denominator=12)

gaussian_st = st.builds(GaussianRational, fractions_st, fractions_st)

nonzero_gaussian_st = gaussian_st.filter(bool)

coeffpoly_st = st.dictionaries(st.integers(0, 2), gaussian_st, max_size=2).map(CoeffPoly)


def _rationalfn(upper, lower, poly):
    return RationalFn(upper, lower, poly)


rationalfn_st = st.builds(
    _rationalfn,
    st.dictionaries(st.integers(1, 4), coeffpoly_st, max_size=2),
    st.dictionaries(st.integers(1, 4), coeffpoly_st, max_size=2),
    st.dictionaries(st.integers(0, 2), coeffpoly_st, max_size=2),
)


@st.composite
def integrable_st(draw):
    """Rational functions with zero polynomial part and decay order >= 2."""
    a = draw(st.integers(1, 3))
    b = draw(st.integers(1, 3))
    deg = a + b - 2
    coeffs = draw(st.dictionaries(st.integers(0, deg), coeffpoly_st, max_size=deg + 1))
    return RationalFn.from_fraction(XiPoly(coeffs), a, b)
