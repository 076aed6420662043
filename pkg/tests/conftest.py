from fractions import Fraction

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from submult.poly import GaussianRational, Polynomial

settings.register_profile(
    "exact",
    deadline=None,
    max_examples=60,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("exact")


def coefficients():
    rational = st.fractions(min_value=-4, max_value=4, max_denominator=3)
    imag = st.one_of(
        st.just(Fraction(0)),
        st.fractions(min_value=-2, max_value=2, max_denominator=2),
    )
    return st.builds(GaussianRational, rational, imag)


def polynomials(dim: int = 2, max_degree: int = 4, max_terms: int = 5):
    mono = st.tuples(
        *[st.integers(min_value=0, max_value=max_degree) for _ in range(dim)]
    )
    return st.dictionaries(mono, coefficients(), max_size=max_terms).map(
        lambda terms: Polynomial(dim, terms)
    )


def nonzero_polynomials(dim: int = 2, max_degree: int = 3, max_terms: int = 4):
    return polynomials(dim, max_degree, max_terms).filter(lambda p: not p.is_zero())
