import random

import pytest

from riordan_inversion.arrays.exp_riordan import ExpRiordanSpec, exp_to_matrix
from riordan_inversion.arrays.inversion import (
    appell_identity,
    bang_bivariate,
    bang_closed_term,
    bang_of_triangle,
    bang_reversal_commutes,
    bang_riordan,
    bell_bang_exp,
    bell_source_from_exp,
    derivative_factor,
    factorized_bang,
    initial_column_law_holds,
    inversion_row_sums,
    is_involution,
    is_self_dual,
    lagrange_subgroup_bang,
    prop1_check,
    revert_transform,
    revert_transform_sequence,
    revert_transform_terms,
    row_sum_law_holds,
)
from riordan_inversion.arrays.riordan import (
    BINOMIAL,
    RiordanSpec,
    Subgroup,
    bivariate_gf,
    classify_subgroup,
    to_matrix,
)
from riordan_inversion.core.errors import (
    NotAppell,
    NotLagrange,
    ReversionNeedsUnitLinearTerm,
    TriangularSupportError,
)
from riordan_inversion.core.expressions import parse_series
from riordan_inversion.core.rings import QQ_Y, PolyInY
from riordan_inversion.core.series import SeriesSupplier
from riordan_inversion.core.triangle import Provenance, Triangle
from riordan_inversion.corpus.loader import load_corpus
from riordan_inversion.corpus.runner import source_triangle
from riordan_inversion.models.corpus_models import CaseKind, Expectation
from tests.constants import TestConstants, as_fractions
from tests.factories import TestDataFactory

CORPUS_ARRAYS = [
    case
    for case in load_corpus()
    if case.kind in (CaseKind.ORDINARY, CaseKind.BIVARIATE) and case.expectation is Expectation.PASS
]


@pytest.fixture
def narayana_spec():
    return TestDataFactory.create_spec(*TestConstants.NARAYANA_SOURCE)


class TestBang:
    """The inversion computed by reversion of the bivariate generating function."""

    def test_narayana(self, narayana_spec):
        result = bang_riordan(narayana_spec, 5)
        assert result.rows == as_fractions(TestConstants.NARAYANA), \
            f"Expected the Narayana triangle, got {result}"

    def test_identity_inverts_to_signed_identity(self):
        result = bang_riordan(RiordanSpec.identity(), 5)
        expected = Triangle.from_function(5, lambda n, k: (-1) ** n if n == k else 0)
        assert result == expected

    def test_chebyshev_row(self):
        spec = TestDataFactory.create_spec("pow:1,-1,2", "x*pow:1,-1,2")
        assert bang_riordan(spec, 4).rows[3] == as_fractions(TestConstants.CHEBYSHEV_BANG_ROW_3)

    def test_triangle_input_agrees_with_pair(self, narayana_spec):
        assert bang_of_triangle(to_matrix(narayana_spec, 5)) == bang_riordan(narayana_spec, 5)

    def test_triangle_needs_unit_corner(self):
        with pytest.raises(ReversionNeedsUnitLinearTerm):
            bang_of_triangle(Triangle([[0], [1, 1]]))

    def test_bivariate_input_agrees_with_pair(self, narayana_spec):
        assert bang_bivariate(bivariate_gf(narayana_spec), 5) == bang_riordan(narayana_spec, 5)

    def test_bivariate_result_must_be_lower_triangular(self):
        # 1 + y^2 x inverts to 1 - y^2 x + ..., which has y^2 in row 1
        G = SeriesSupplier.from_coefficients([1, PolyInY([0, 0, 1])], "1+y^2x", QQ_Y)
        with pytest.raises(TriangularSupportError):
            bang_bivariate(G, 3)


class TestThreeWayAgreement:
    """Reversion, the closed term and the factorization give the same entries."""

    @pytest.mark.parametrize("seed", range(25))
    def test_random_pairs(self, seed):
        spec = TestDataFactory.create_random_spec(random.Random(seed))
        order = 5
        pipeline = bang_riordan(spec, order)
        closed = Triangle.from_function(order, lambda n, k: bang_closed_term(spec, n, k))
        factorized = factorized_bang(spec, order)
        assert pipeline == closed, f"Closed term disagrees for {spec.label}"
        assert pipeline == factorized, f"Factorization disagrees for {spec.label}"

    def test_derivative_factor_is_in_the_derivative_subgroup(self, narayana_spec):
        assert Subgroup.DERIVATIVE in classify_subgroup(derivative_factor(narayana_spec), 5)


class TestSubgroupShortcuts:
    def test_lagrange_subgroup(self):
        spec = RiordanSpec.lagrange(parse_series("x*pow:-1,-1"))
        assert lagrange_subgroup_bang(spec, 5) == bang_riordan(spec, 5)

    def test_lagrange_subgroup_rejects_other_arrays(self, narayana_spec):
        with pytest.raises(NotLagrange):
            lagrange_subgroup_bang(narayana_spec, 3)

    def test_appell_identity(self):
        left, right = appell_identity(RiordanSpec.appell(parse_series("pow:-1,-2")), 5)
        assert left == right

    def test_appell_identity_rejects_other_arrays(self, narayana_spec):
        with pytest.raises(NotAppell):
            appell_identity(narayana_spec, 3)

    @pytest.mark.parametrize("g", ["pow:1,-1,2", "factorial", "catalan"])
    def test_bell_bang_is_exponential(self, g):
        supplier = parse_series(g)
        spec, triangle = bell_bang_exp(supplier, 5)
        assert isinstance(spec, ExpRiordanSpec)
        assert triangle == bang_riordan(RiordanSpec.bell(supplier), 5)

    @pytest.mark.parametrize("u", ["cosh", "exp", "besseli1"])
    def test_bell_source_from_exp(self, u):
        supplier = parse_series(u)
        target = exp_to_matrix(ExpRiordanSpec(supplier, SeriesSupplier.from_coefficients([0, -1])), 5)
        assert bang_riordan(bell_source_from_exp(supplier), 5) == target


class TestRevertTransform:
    def test_geometric_series(self):
        assert revert_transform_terms([1, 1, 1, 1]).terms == as_fractions([1, -1, 1, -1])

    def test_catalan_reverts_to_one_minus_x(self):
        # x C(x) is the inverse of x - x^2
        catalan = SeriesSupplier.from_coefficients(TestConstants.CATALAN)
        assert revert_transform_sequence(catalan, 5).terms == as_fractions([1, -1, 0, 0, 0, 0])

    def test_factorials(self):
        reverted = revert_transform(parse_series("factorial"))(5)
        assert list(reverted.coeffs) == list(as_fractions(TestConstants.REVERTED_FACTORIALS))

    def test_involution(self):
        rng = random.Random(3)
        for _ in range(10):
            g = TestDataFactory.create_random_series(rng)
            twice = revert_transform(revert_transform(g))
            assert twice(6) == g(6), f"revert twice changed {g.name}"

    @pytest.mark.parametrize("seed", range(30))
    def test_invert_transform_commutes_with_binomial(self, seed):
        g = TestDataFactory.create_random_series(random.Random(seed))
        assert prop1_check(g, 6), f"Failed for {g.name}"


class TestLaws:
    def test_self_dual(self):
        spec = TestDataFactory.create_spec(*TestConstants.SELF_DUAL_SOURCE)
        assert is_self_dual(spec, 5)
        assert to_matrix(spec, 4).rows == as_fractions(TestConstants.SELF_DUAL)
        assert not is_self_dual(BINOMIAL, 5)

    @pytest.mark.parametrize("r", [1, 2, 3, 4])
    def test_self_dual_involutions(self, r):
        # (-1/(1+rx), -x/(1+rx)) squares to the identity and is its own inversion
        spec = TestDataFactory.create_spec(f"-pow:{r},-1", f"-x*pow:{r},-1")
        assert is_involution(spec, 8), f"r = {r} does not square to the identity"
        assert is_self_dual(spec, 8), f"r = {r} is not its own inversion"

    def test_involution_rejects_other_arrays(self, narayana_spec):
        assert not is_involution(narayana_spec, 5)
        assert not is_involution(BINOMIAL, 5)

    def test_reversal_commutes(self, narayana_spec):
        assert bang_reversal_commutes(narayana_spec, 5)
        rng = random.Random(5)
        for _ in range(5):
            assert bang_reversal_commutes(TestDataFactory.create_random_spec(rng), 5)

    def test_sequence_laws_on_random_arrays(self):
        rng = random.Random(13)
        for _ in range(10):
            triangle = to_matrix(TestDataFactory.create_random_spec(rng), 6)
            assert initial_column_law_holds(triangle)
            assert row_sum_law_holds(triangle)

    def test_inversion_row_sums(self, narayana_spec):
        sums = inversion_row_sums(to_matrix(narayana_spec, 4))
        assert sums.provenance is Provenance.ROW_SUMS
        assert sums.terms == as_fractions([1, 2, 5, 14, 42])


class TestCorpusArrayLaws:
    """Laws every ordinary and bivariate array in the packaged corpus must satisfy."""

    @pytest.mark.parametrize("case", CORPUS_ARRAYS, ids=lambda case: case.id)
    def test_inversion_is_an_involution(self, case):
        triangle = source_triangle(case.source, case.rows_to_compute)
        assert bang_of_triangle(bang_of_triangle(triangle)) == triangle

    @pytest.mark.parametrize("case", CORPUS_ARRAYS, ids=lambda case: case.id)
    def test_sequence_laws(self, case):
        triangle = source_triangle(case.source, case.rows_to_compute)
        assert initial_column_law_holds(triangle), f"initial column law fails for {case.id}"
        assert row_sum_law_holds(triangle), f"row sum law fails for {case.id}"
