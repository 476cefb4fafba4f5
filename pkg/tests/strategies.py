
from hypothesis import strategies as st

from pgwa.poly import LaurentPoly
from pgwa.scalar import Scalar, euler_phi

small_fracs = st.fractions(min_value=-5, max_value=5, max_denominator=4)


@st.composite
def scalars(draw, conductors=(1, 2, 3, 4, 5, 6, 8, 12)):
    n = draw(st.sampled_from(conductors))
    coeffs = draw(st.lists(small_fracs, min_size=euler_phi(n), max_size=euler_phi(n)))
    return Scalar.from_coeffs(n, coeffs)


nonzero_scalars = scalars().filter(bool)


@st.composite
def polys(draw, vars=("t", "h"), max_terms=4, lo=-3, hi=3, coeffs=None):
    coeffs = small_fracs.map(Scalar) if coeffs is None else coeffs
    n = draw(st.integers(0, max_terms))
    terms = {}
    for _ in range(n):
        e = tuple(draw(st.integers(lo, hi)) for _ in vars)
        terms[e] = draw(coeffs)
    return LaurentPoly(vars, terms)


def h_polys(**kw):
    return polys(vars=("h",), **kw)


# a(h) with at least two terms
gwa_a = polys(vars=("h",), max_terms=4, lo=-2, hi=3,
              coeffs=st.integers(-3, 3).filter(bool).map(Scalar)).filter(lambda p: len(p.terms) >= 2)
