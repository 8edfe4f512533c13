"""Dispatch corpus cases to the array pipelines and compare bit-exactly."""

import logging
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from typing import Callable, Sequence

from riordan_inversion.arrays import closed_forms
from riordan_inversion.arrays.contfrac import CF_BUILDERS, CFSpec, cf_triangle, eval_cf_at, explicit_cf
from riordan_inversion.arrays.exp_riordan import (
    ExpRiordanSpec,
    airey_row_sums,
    exp_bang,
    exp_inverse,
    exp_to_matrix,
)
from riordan_inversion.arrays.inversion import (
    bang_of_triangle,
    bang_riordan,
    derivative_factor,
    revert_transform_sequence,
    revert_transform_terms,
)
from riordan_inversion.arrays.riordan import (
    RiordanSpec,
    binomial_power,
    invert_transform_array,
    inverse,
    to_matrix,
)
from riordan_inversion.core.expressions import parse_series
from riordan_inversion.core.numbers import format_rational, to_rational
from riordan_inversion.core.rings import PolyInY
from riordan_inversion.core.triangle import SequenceView, Triangle
from riordan_inversion.models.corpus_models import (
    CaseKind,
    CaseReport,
    CaseSource,
    CaseStatus,
    CFSource,
    CorpusCase,
    CorpusSummary,
    Expectation,
    Mismatch,
    Operation,
    RowSumTarget,
)

logger = logging.getLogger(__name__)

Result = Triangle | SequenceView


def _needs_param(fn: Callable[[Fraction, int], SequenceView]) -> Callable[[Fraction | None, int], SequenceView]:
    def wrapped(param: Fraction | None, order: int) -> SequenceView:
        if param is None:
            raise ValueError("this formula needs 'param'")
        return fn(param, order)

    return wrapped


FORMULAS: dict[str, Callable[[Fraction | None, int], SequenceView]] = {
    "airey": lambda _p, order: airey_row_sums(order),
    "catalan": lambda _p, order: SequenceView(
        tuple(Fraction(closed_forms.catalan(n)) for n in range(order + 1))
    ),
    "pascal_row_sums_bessel": _needs_param(closed_forms.pascal_row_sums_bessel),
    "pascal_row_sums_binomial": _needs_param(closed_forms.pascal_row_sums_binomial),
    "pascal_row_sums_binomial_printed": _needs_param(
        lambda r, order: closed_forms.pascal_row_sums_binomial(r, order, include_r_power=False)
    ),
    "pascal_row_sums_catalan_fibonacci": lambda _p, order: closed_forms.pascal_row_sums_catalan_fibonacci(order),
    "pascal_second_inverse_binomial_row_sums": _needs_param(closed_forms.pascal_second_inverse_binomial_row_sums),
    "second_family_row_sums": _needs_param(closed_forms.second_family_row_sums),
    "second_family_factor_row_sums": _needs_param(closed_forms.second_family_factor_row_sums),
}


def _optional_rational(text: str | None) -> Fraction | None:
    return to_rational(text) if text is not None else None


def ordinary_spec(source: CaseSource) -> RiordanSpec:
    if source.family:
        spec = closed_forms.family_spec(
            closed_forms.FamilyParam(family=source.family, param=source.param)
        )
    else:
        spec = RiordanSpec.parse(source.g, source.f)
    if source.invert_alpha is not None:
        spec = invert_transform_array(spec, source.invert_alpha)
    return spec


def source_triangle(source: CaseSource, order: int) -> Triangle:
    """The source array of a bivariate case, rows padded with zeros."""
    if source.rows is not None:
        rows = [[to_rational(v) for v in row] for row in source.rows[: order + 1]]
        if len(rows) < order + 1:
            raise ValueError(f"source has {len(rows)} rows but {order + 1} are needed")
        triangle = Triangle([row + [Fraction(0)] * (n + 1 - len(row)) for n, row in enumerate(rows)])
    else:
        triangle = to_matrix(ordinary_spec(source), order)
    return triangle.reversal() if source.reverse else triangle


def build_cf(source: CFSource) -> CFSpec:
    if source.builder is not None:
        if source.builder not in CF_BUILDERS:
            raise ValueError(f"unknown continued fraction builder '{source.builder}'")
        return CF_BUILDERS[source.builder](_optional_rational(source.param))

    def polynomial(item: str | list[str]):
        return PolyInY(item) if isinstance(item, list) else to_rational(item)

    levels = [
        ([polynomial(c) for c in level.numerator], [polynomial(c) for c in level.denominator])
        for level in source.levels
    ]
    return explicit_cf(levels, repeat_last=source.repeat_last)


def _pick(case: CorpusCase, matrix: Callable[[], Triangle], bang: Callable[[], Triangle], inner: Callable[[], Triangle] | None = None) -> Result:
    op = case.operation
    if op is Operation.MATRIX:
        return binomial_power(matrix(), case.binomial)
    if op in (Operation.BANG, Operation.EXP_BANG):
        return binomial_power(bang(), case.binomial)
    if op is Operation.INNER_MATRIX and inner is not None:
        return binomial_power(inner(), case.binomial)
    if op in (Operation.ROW_SUMS, Operation.INITIAL_COLUMN):
        if case.of is RowSumTarget.MATRIX:
            triangle = matrix()
        elif case.of is RowSumTarget.BANG:
            triangle = bang()
        elif inner is not None:
            triangle = inner()
        else:
            raise ValueError(f"'of: {case.of.value}' is not available for kind '{case.kind.value}'")
        triangle = binomial_power(triangle, case.binomial)
        return triangle.row_sums() if op is Operation.ROW_SUMS else triangle.initial_column()
    raise ValueError(f"operation '{op.value}' is not available for kind '{case.kind.value}'")


def evaluate_case(case: CorpusCase) -> Result:
    order = case.rows_to_compute
    source = case.source

    if case.kind is CaseKind.ORDINARY:
        if source.reverse:
            reversed_array = source_triangle(source, order)
            if case.operation is Operation.INVERSE:
                return reversed_array.inverse()
            return _pick(case, lambda: reversed_array, lambda: bang_of_triangle(reversed_array))
        spec = ordinary_spec(source)
        if case.operation is Operation.INVERSE:
            return to_matrix(inverse(spec), order)
        return _pick(
            case,
            lambda: to_matrix(spec, order),
            lambda: bang_riordan(spec, order),
            lambda: to_matrix(derivative_factor(spec), order),
        )

    if case.kind is CaseKind.EXPONENTIAL:
        spec = ExpRiordanSpec.parse(source.u, source.v)
        if case.operation is Operation.INVERSE:
            return exp_to_matrix(exp_inverse(spec), order)
        return _pick(case, lambda: exp_to_matrix(spec, order), lambda: exp_bang(spec, order))

    if case.kind is CaseKind.BIVARIATE:
        triangle = source_triangle(source, order)
        return _pick(case, lambda: triangle, lambda: bang_of_triangle(triangle))

    if case.kind is CaseKind.SEQUENCE:
        if case.operation is Operation.FORMULA:
            if source.formula not in FORMULAS:
                raise ValueError(f"unknown formula '{source.formula}'")
            return FORMULAS[source.formula](_optional_rational(source.param), order)
        if source.seq is not None:
            terms = [to_rational(v) for v in source.seq][: order + 1]
            terms += [Fraction(0)] * (order + 1 - len(terms))
            return revert_transform_terms(terms)
        return revert_transform_sequence(parse_series(source.g), order)

    cf = build_cf(source.cf)
    if source.cf.y is not None:
        return SequenceView(eval_cf_at(cf, order, to_rational(source.cf.y)).coeffs)
    return cf_triangle(cf, order)


def first_mismatch(result: Result, expected: Sequence) -> Mismatch | None:
    """Scan rows top to bottom, entries left to right; sequences report k = 0."""
    if isinstance(result, Triangle):
        if expected and not isinstance(expected[0], list):
            raise ValueError("pipeline produced a triangle but the case expects a sequence")
        for n, row in enumerate(expected):
            for k, want in enumerate(row):
                got = result.entry(n, k) if n <= result.order else None
                if got != want:
                    return Mismatch(n=n, k=k, got=_text(got), want=format_rational(want))
        return None
    if expected and isinstance(expected[0], list):
        raise ValueError("pipeline produced a sequence but the case expects a triangle")
    for n, want in enumerate(expected):
        got = result[n] if n < len(result) else None
        if got != want:
            return Mismatch(n=n, k=0, got=_text(got), want=format_rational(want))
    return None


def _text(value) -> str:
    if value is None:
        return "<missing>"
    if isinstance(value, PolyInY):
        return str(value)
    return format_rational(value)


def _as_expected(case: CorpusCase, status: CaseStatus, mismatch: Mismatch | None, error_type: str | None) -> bool:
    if case.expectation is Expectation.PASS:
        return status is CaseStatus.PASS
    recorded = case.discrepancy
    if status is CaseStatus.PASS or recorded is None:
        logger.warning("Case %s is marked known_discrepancy but did not fail", case.id)
        return False
    if recorded.error is not None:
        matched = error_type == recorded.error
    else:
        matched = mismatch is not None and [mismatch.n, mismatch.k] == recorded.at
    if not matched:
        logger.warning("Case %s failed, but not in its recorded way", case.id)
    return matched


def run_case(case: CorpusCase) -> CaseReport:
    """Run one case; pipeline errors become part of the report."""
    mismatch: Mismatch | None = None
    error: str | None = None
    error_type: str | None = None
    try:
        result = evaluate_case(case)
        if (
            isinstance(result, Triangle)
            and case.operation in (Operation.BANG, Operation.EXP_BANG)
            and all(v.denominator == 1 for row in case.expected_values() for v in row)
        ):
            result.assert_integral()
        mismatch = first_mismatch(result, case.expected_values())
    except Exception as exc:
        logger.debug("Case %s raised", case.id, exc_info=True)
        error = str(exc)
        error_type = type(exc).__name__

    status = CaseStatus.PASS if mismatch is None and error is None else CaseStatus.FAIL
    return CaseReport(
        id=case.id,
        status=status,
        expectation=case.expectation,
        first_mismatch=mismatch,
        error=error,
        error_type=error_type,
        as_expected=_as_expected(case, status, mismatch, error_type),
        oeis=case.oeis,
    )


def run_corpus(cases: Sequence[CorpusCase], jobs: int = 1) -> list[CaseReport]:
    """Run every case; reports come back in corpus order whatever ``jobs`` is."""
    if jobs > 1 and len(cases) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            reports = list(pool.map(run_case, cases))
    else:
        reports = [run_case(case) for case in cases]

    summary = CorpusSummary.from_reports(reports)
    logger.info(
        "Verified %d cases: %d passed, %d failed, %d known discrepancies, %d unexpected",
        summary.total,
        summary.passed,
        summary.failed,
        summary.known_discrepancies,
        len(summary.unexpected),
    )
    return reports
