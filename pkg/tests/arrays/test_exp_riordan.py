from fractions import Fraction

import pytest

from riordan_inversion.arrays.exp_riordan import (
    ExpRiordanSpec,
    airey_row_sums,
    exp_bang,
    exp_bang_via_inverse_column,
    exp_bivariate_egf,
    exp_element_at,
    exp_inverse,
    exp_to_matrix,
    exponential_revert_transform,
    integral_array,
    inverse_column_polynomials,
)
from riordan_inversion.core.errors import IndexAboveDiagonal, InvalidRiordanPair
from riordan_inversion.core.rings import PolyInY
from riordan_inversion.core.series import SeriesSupplier
from riordan_inversion.core.triangle import Provenance
from tests.constants import TestConstants, as_fractions
from tests.factories import TestDataFactory


class TestExpRiordanSpec:
    def test_exp_binomial_is_pascal(self):
        assert exp_to_matrix(TestDataFactory.create_exp_spec(), 4).rows == as_fractions(TestConstants.PASCAL)

    @pytest.mark.parametrize("u, v", [("x", "x"), ("1", "1,1"), ("1", "poly:0,0,1")])
    def test_invalid_pairs(self, u, v):
        with pytest.raises(InvalidRiordanPair):
            ExpRiordanSpec.parse(u, v)

    def test_element_at(self):
        spec = TestDataFactory.create_exp_spec("cosh", "x")
        matrix = exp_to_matrix(spec, 6)
        assert exp_element_at(spec, 6, 2) == matrix.entry(6, 2) == 15
        with pytest.raises(IndexAboveDiagonal):
            exp_element_at(spec, 2, 3)

    def test_inverse(self):
        spec = TestDataFactory.create_exp_spec("cosh", "poly:0,1,1")
        assert exp_to_matrix(exp_inverse(spec), 5) == exp_to_matrix(spec, 5).inverse()
        assert exp_to_matrix(exp_inverse(TestDataFactory.create_exp_spec()), 4).rows == \
            as_fractions(TestConstants.SIGNED_PASCAL)

    def test_bivariate_egf(self):
        Ge = exp_bivariate_egf(TestDataFactory.create_exp_spec())(2)
        assert Ge[2] == PolyInY([Fraction(1, 2), 1, Fraction(1, 2)])


class TestExpBang:
    @pytest.mark.parametrize(
        "u, v, expected",
        [
            ("exp", "x", TestConstants.EXP_BINOMIAL_BANG),
            ("cosh", "x", TestConstants.COSH_BANG),
        ],
    )
    def test_known_inversions(self, u, v, expected):
        spec = TestDataFactory.create_exp_spec(u, v)
        result = exp_bang(spec, len(expected) - 1)
        assert result.rows == as_fractions(expected), f"Unexpected inversion of [{u}, {v}]: {result}"

    @pytest.mark.parametrize(
        "u, v",
        [("exp", "x"), ("cosh", "x"), ("besseli1", "poly:0,-1"), ("pow:1,-1", "poly:0,1,2")],
    )
    def test_inverse_column_route_agrees(self, u, v):
        spec = TestDataFactory.create_exp_spec(u, v)
        assert exp_bang_via_inverse_column(spec, 5) == exp_bang(spec, 5)

    def test_inverse_column_polynomials_are_rows(self):
        spec = TestDataFactory.create_exp_spec("cosh", "x")
        polynomials = inverse_column_polynomials(spec, 4)
        for n, row in enumerate(TestConstants.COSH_BANG[:5]):
            assert polynomials[n] == PolyInY(row), f"p_{n} = {polynomials[n]}"

    def test_integral_array_and_its_inverse(self):
        integral = integral_array(TestDataFactory.create_exp_spec("cosh", "x"))
        y = PolyInY([0, 1])
        matrix = exp_to_matrix(integral, 4)
        assert list(matrix.rows[4]) == [0, y * (y * y + 3), 7 * y * y + 4, 6 * y, 1]

        inverse = exp_to_matrix(exp_inverse(integral), 4)
        assert list(inverse.rows[4]) == [0, y * (7 - 6 * y * y), 11 * y * y - 4, -6 * y, 1]
        assert list(inverse.rows[3]) == [0, 2 * y * y - 1, -3 * y, 1]
        assert inverse == matrix.inverse()


class TestExponentialRevertTransform:
    def test_constant_is_fixed(self):
        assert exponential_revert_transform(SeriesSupplier.constant(1), 3).terms == as_fractions([1, 0, 0, 0])

    def test_airey_row_sums(self):
        sums = airey_row_sums(10)
        assert sums.terms == as_fractions(TestConstants.AIREY)
        assert sums.provenance is Provenance.ROW_SUMS

    def test_row_sums_of_the_cosh_inversion(self):
        spec = TestDataFactory.create_exp_spec("cosh", "x")
        assert exp_bang(spec, 6).row_sums().terms == as_fractions(TestConstants.AIREY[:7])
