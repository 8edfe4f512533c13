from fractions import Fraction

import pytest
from pydantic import ValidationError

from riordan_inversion.core.triangle import SequenceView, Triangle
from riordan_inversion.corpus.runner import FORMULAS, evaluate_case, first_mismatch, run_case, run_corpus
from riordan_inversion.models.corpus_models import CaseStatus, CorpusSummary, Discrepancy, Expectation
from tests.constants import TestConstants, as_fractions
from tests.factories import TestDataFactory


def case_by_id(corpus, case_id):
    return next(case for case in corpus if case.id == case_id)


class TestPackagedCorpus:
    def test_every_case_behaves_as_recorded(self, packaged_corpus):
        reports = run_corpus(packaged_corpus)
        summary = CorpusSummary.from_reports(reports)
        assert summary.ok, f"Unexpected results: {summary.unexpected}"
        assert summary.total == 73
        assert summary.known_discrepancies == 3
        assert summary.failed == 3, f"Expected only the known discrepancies to fail, got {summary.failed}"


class TestRunCase:
    def test_passing_case(self):
        report = run_case(TestDataFactory.create_case())
        assert report.status is CaseStatus.PASS
        assert report.as_expected
        assert report.first_mismatch is None

    def test_first_mismatch_is_reported(self):
        expected = [[1], [1, 1], [1, 4, 1], [1, 6, 6, 1]]
        report = run_case(TestDataFactory.create_case(expected=expected))
        assert report.status is CaseStatus.FAIL
        assert not report.as_expected
        mismatch = report.first_mismatch
        assert (mismatch.n, mismatch.k) == (2, 1), f"Expected mismatch at (2, 1), got ({mismatch.n}, {mismatch.k})"
        assert (mismatch.got, mismatch.want) == ("3", "4")

    def test_known_discrepancy_that_passes_is_unexpected(self):
        case = TestDataFactory.create_case(expectation="known_discrepancy", discrepancy={"at": [0, 0]})
        report = run_case(case)
        assert report.status is CaseStatus.PASS
        assert not report.as_expected

    def test_known_discrepancy_at_recorded_entry(self, small_corpus):
        report = run_case(case_by_id(small_corpus, "one-plus-rx-1-cf-printed"))
        assert report.status is CaseStatus.FAIL
        assert report.expectation is Expectation.KNOWN_DISCREPANCY
        assert report.as_expected

    def test_error_discrepancy(self, packaged_corpus):
        case = case_by_id(packaged_corpus, "second-family-2-cf-printed")
        report = run_case(case)
        assert report.error_type == "NonUnitDenominator"
        assert report.as_expected

        wrong = case.model_copy(update={"discrepancy": Discrepancy(error="ZeroDivisionError")})
        assert not run_case(wrong).as_expected

    def test_pipeline_errors_are_captured(self):
        case = TestDataFactory.create_case(source={"g": "0,1", "f": "0,1"})
        report = run_case(case)
        assert report.status is CaseStatus.FAIL
        assert report.error is not None
        assert report.error_type is not None


class TestEvaluateCase:
    def test_revert_sequence(self, small_corpus):
        result = evaluate_case(case_by_id(small_corpus, "revert-naturals"))
        assert result.terms == as_fractions([1, -2, 5, -14])

    def test_order_override_pads_sequence(self):
        case = TestDataFactory.create_case(
            case_id="padded",
            kind="sequence",
            operation="revert_seq",
            source={"seq": "1,1"},
            expected=[1, -1],
            order=3,
        )
        # 1 + x is x + x^2 after the shift; its reversion carries the signed Catalan numbers
        assert evaluate_case(case).terms == as_fractions([1, -1, 2, -5])

    def test_exponential_matrix(self):
        case = TestDataFactory.create_case(
            case_id="exp-binomial",
            kind="exponential",
            operation="matrix",
            source={"u": "exp", "v": "x"},
            expected=TestConstants.PASCAL,
        )
        assert evaluate_case(case).rows == as_fractions(TestConstants.PASCAL)

    def test_row_sums_of_the_inversion(self):
        case = TestDataFactory.create_case(
            case_id="narayana-row-sums",
            operation="row_sums",
            of="bang",
            expected=TestConstants.CATALAN[1:6],
        )
        assert evaluate_case(case).terms == as_fractions(TestConstants.CATALAN[1:6])

    def test_bivariate_rows_are_padded(self):
        case = TestDataFactory.create_case(
            case_id="pascal-rows",
            kind="bivariate",
            operation="matrix",
            source={"rows": [[1], [1, 1], [1, 2]]},
            expected=[[1], [1, 1], [1, 2, 0]],
        )
        assert evaluate_case(case).entry(2, 2) == 0

    def test_inverse_binomial_of_the_inversion(self):
        case = TestDataFactory.create_case(
            case_id="narayana-inverse-binomial",
            binomial=-1,
            expected=[[1], [0, 1], [0, 1, 1], [0, 0, 3, 1]],
        )
        assert run_case(case).status is CaseStatus.PASS

    def test_binomial_needs_an_array_case(self):
        with pytest.raises(ValidationError, match="'binomial' only applies"):
            TestDataFactory.create_case(
                case_id="revert-shifted",
                kind="sequence",
                operation="revert_seq",
                source={"seq": "1,1"},
                expected=[1, -1],
                binomial=1,
            )

    def test_unknown_formula(self):
        case = TestDataFactory.create_case(
            case_id="formula",
            kind="sequence",
            operation="formula",
            source={"formula": "nope"},
            expected=[1],
        )
        with pytest.raises(ValueError, match="unknown formula"):
            evaluate_case(case)


class TestFirstMismatch:
    def test_triangle_against_sequence(self):
        with pytest.raises(ValueError, match="expects a sequence"):
            first_mismatch(Triangle.identity(2), [Fraction(1), Fraction(0), Fraction(0)])

    def test_sequence_against_triangle(self):
        with pytest.raises(ValueError, match="expects a triangle"):
            first_mismatch(SequenceView.of([1, 2]), [[Fraction(1)]])

    def test_short_result(self):
        mismatch = first_mismatch(SequenceView.of([1]), [Fraction(1), Fraction(2)])
        assert (mismatch.n, mismatch.k, mismatch.got, mismatch.want) == (1, 0, "<missing>", "2")

    def test_rational_entries(self):
        mismatch = first_mismatch(SequenceView.of([TestConstants.HALF]), [Fraction(1, 3)])
        assert (mismatch.got, mismatch.want) == ("1/2", "1/3")


class TestRunCorpus:
    def test_parallel_run_keeps_order(self, small_corpus):
        reports = run_corpus(small_corpus, jobs=2)
        assert [r.id for r in reports] == [case.id for case in small_corpus]
        assert all(r.as_expected for r in reports)

    def test_formulas_need_their_parameter(self):
        with pytest.raises(ValueError, match="needs 'param'"):
            FORMULAS["second_family_row_sums"](None, 3)
        assert FORMULAS["catalan"](None, 6).terms == as_fractions(TestConstants.CATALAN)
