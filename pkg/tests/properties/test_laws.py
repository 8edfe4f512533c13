"""Algebraic laws of series, arrays and their inversion, checked on generated inputs."""

from hypothesis import given, settings

from riordan_inversion.arrays.exp_riordan import exp_bang, exp_bang_via_inverse_column, exp_inverse, exp_to_matrix
from riordan_inversion.arrays.inversion import (
    bang_closed_term,
    bang_of_triangle,
    bang_reversal_commutes,
    bang_riordan,
    bell_bang_exp,
    factorized_bang,
    initial_column_law_holds,
    prop1_check,
    revert_transform,
    row_sum_law_holds,
)
from riordan_inversion.arrays.riordan import RiordanSpec, inverse, product, to_matrix
from riordan_inversion.core.series import XSeries, compose, lagrange_coefficient, reciprocal, revert
from riordan_inversion.core.triangle import Triangle
from tests.properties.strategies import (
    exp_specs,
    lagrange_series,
    normalized_series,
    orders,
    riordan_specs,
    unit_series,
)

laws = settings(max_examples=40, derandomize=True, deadline=None)
quick_laws = settings(max_examples=25, derandomize=True, deadline=None)


class TestSeriesLaws:
    @quick_laws
    @given(unit_series(), orders(6))
    def test_reciprocal(self, a, order):
        assert a(order) * reciprocal(a(order)) == XSeries.one(order)

    @quick_laws
    @given(lagrange_series(), orders(6))
    def test_reversion(self, f, order):
        series = f(order)
        assert compose(series, revert(series)) == XSeries.x(order)
        assert revert(revert(series)) == series

    @quick_laws
    @given(unit_series(), lagrange_series(), lagrange_series(), orders(5))
    def test_composition_is_associative(self, a, f, h, order):
        a, f, h = a(order), f(order), h(order)
        assert compose(a, compose(f, h)) == compose(compose(a, f), h)

    @quick_laws
    @given(unit_series(), lagrange_series(), orders(6))
    def test_lagrange_inversion_matches_direct_reversion(self, H, f, order):
        direct = compose(H(order), revert(f(order)))
        for n in range(1, order + 1):
            assert lagrange_coefficient(H(order), f(order), n) == direct[n], f"coefficient {n}"


class TestInversionAgreement:
    @laws
    @given(riordan_specs(), orders())
    def test_closed_term(self, spec, order):
        closed = Triangle.from_function(order, lambda n, k: bang_closed_term(spec, n, k))
        assert bang_riordan(spec, order) == closed

    @laws
    @given(riordan_specs(), orders())
    def test_factorization(self, spec, order):
        assert bang_riordan(spec, order) == factorized_bang(spec, order)

    @quick_laws
    @given(riordan_specs(), orders())
    def test_triangle_input(self, spec, order):
        assert bang_of_triangle(to_matrix(spec, order)) == bang_riordan(spec, order)

    @quick_laws
    @given(riordan_specs(), orders(4))
    def test_reversal_commutes(self, spec, order):
        assert bang_reversal_commutes(spec, order)


class TestRevertTransform:
    @laws
    @given(unit_series(), orders(6))
    def test_involution(self, g, order):
        assert revert_transform(revert_transform(g))(order) == g(order)

    @laws
    @given(normalized_series(), orders(6))
    def test_invert_transform_and_binomial_transform(self, g, order):
        assert prop1_check(g, order)


class TestSequenceLaws:
    @quick_laws
    @given(riordan_specs(), orders())
    def test_initial_column(self, spec, order):
        assert initial_column_law_holds(to_matrix(spec, order))

    @quick_laws
    @given(riordan_specs(), orders())
    def test_row_sums(self, spec, order):
        assert row_sum_law_holds(to_matrix(spec, order))


class TestGroupLaw:
    @quick_laws
    @given(riordan_specs(), riordan_specs(), orders(4))
    def test_product(self, a, b, order):
        assert to_matrix(product(a, b), order) == to_matrix(a, order) @ to_matrix(b, order)

    @quick_laws
    @given(riordan_specs(), orders(4))
    def test_inverse(self, spec, order):
        assert to_matrix(product(spec, inverse(spec)), order) == Triangle.identity(order)


class TestExponentialLaws:
    @quick_laws
    @given(exp_specs(), orders(4))
    def test_inverse_column_route(self, spec, order):
        assert exp_bang_via_inverse_column(spec, order) == exp_bang(spec, order)

    @quick_laws
    @given(exp_specs(), orders(4))
    def test_inverse(self, spec, order):
        assert exp_to_matrix(exp_inverse(spec), order) == exp_to_matrix(spec, order).inverse()

    @quick_laws
    @given(normalized_series(), orders(4))
    def test_bell_inversion_is_exponential(self, g, order):
        _, triangle = bell_bang_exp(g, order)
        assert triangle == bang_riordan(RiordanSpec.bell(g), order)
