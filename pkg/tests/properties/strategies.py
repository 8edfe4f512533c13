from hypothesis import strategies as st

from riordan_inversion.arrays.exp_riordan import ExpRiordanSpec
from riordan_inversion.arrays.riordan import RiordanSpec
from riordan_inversion.core.series import SeriesSupplier

MAX_TERMS = 5


def small_ints(bound: int = 3):
    return st.integers(min_value=-bound, max_value=bound)


def units():
    return st.sampled_from([1, -1])


@st.composite
def unit_series(draw, max_terms: int = MAX_TERMS):
    """Polynomials with constant term +-1, as lazy series."""
    tail = draw(st.lists(small_ints(), max_size=max_terms - 1))
    return SeriesSupplier.from_coefficients([draw(units())] + tail)


@st.composite
def normalized_series(draw, max_terms: int = MAX_TERMS):
    """Polynomials with constant term 1."""
    tail = draw(st.lists(small_ints(), max_size=max_terms - 1))
    return SeriesSupplier.from_coefficients([1] + tail)


@st.composite
def lagrange_series(draw, max_terms: int = MAX_TERMS):
    """f(0) = 0 and f'(0) = +-1."""
    tail = draw(st.lists(small_ints(), max_size=max_terms - 2))
    return SeriesSupplier.from_coefficients([0, draw(units())] + tail)


@st.composite
def riordan_specs(draw):
    return RiordanSpec(draw(unit_series()), draw(lagrange_series()))


@st.composite
def exp_specs(draw):
    return ExpRiordanSpec(draw(unit_series()), draw(lagrange_series()))


def orders(max_order: int = 5):
    return st.integers(min_value=1, max_value=max_order)
