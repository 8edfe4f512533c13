import logging
from enum import Enum
from fractions import Fraction
from typing import Any, Dict, List

from pydantic import BaseModel, Field, ValidationError, field_validator, model_validator

from riordan_inversion.arrays.closed_forms import Family
from riordan_inversion.core.numbers import format_rational, to_rational

logger = logging.getLogger(__name__)


def _exact_text(value: Any) -> str:
    """Normalize one corpus number to canonical decimal text; floats are refused."""
    if isinstance(value, (float, bool)) or value is None:
        raise ValueError(f"{value!r} is not an exact integer or 'p/q' rational")
    try:
        return format_rational(to_rational(value if isinstance(value, int) else str(value)))
    except ZeroDivisionError as exc:
        raise ValueError(f"zero denominator in {value!r}") from exc


class CaseKind(str, Enum):
    ORDINARY = "ordinary"
    EXPONENTIAL = "exponential"
    BIVARIATE = "bivariate"
    SEQUENCE = "sequence"
    CF = "cf"


class Operation(str, Enum):
    MATRIX = "matrix"
    INVERSE = "inverse"
    BANG = "bang"
    EXP_BANG = "exp_bang"
    REVERT_SEQ = "revert_seq"
    ROW_SUMS = "row_sums"
    INITIAL_COLUMN = "initial_column"
    CF_EVAL = "cf_eval"
    INNER_MATRIX = "inner_matrix"
    FORMULA = "formula"


class Expectation(str, Enum):
    PASS = "pass"
    KNOWN_DISCREPANCY = "known_discrepancy"


class RowSumTarget(str, Enum):
    MATRIX = "matrix"
    BANG = "bang"
    INNER = "inner"


_ALLOWED_OPERATIONS: Dict[CaseKind, set[Operation]] = {
    CaseKind.ORDINARY: {
        Operation.MATRIX,
        Operation.INVERSE,
        Operation.BANG,
        Operation.ROW_SUMS,
        Operation.INITIAL_COLUMN,
        Operation.INNER_MATRIX,
    },
    CaseKind.EXPONENTIAL: {
        Operation.MATRIX,
        Operation.INVERSE,
        Operation.EXP_BANG,
        Operation.ROW_SUMS,
        Operation.INITIAL_COLUMN,
    },
    CaseKind.BIVARIATE: {
        Operation.MATRIX,
        Operation.BANG,
        Operation.ROW_SUMS,
        Operation.INITIAL_COLUMN,
    },
    CaseKind.SEQUENCE: {Operation.REVERT_SEQ, Operation.FORMULA},
    CaseKind.CF: {Operation.CF_EVAL},
}

_BINOMIAL_KINDS = {CaseKind.ORDINARY, CaseKind.EXPONENTIAL, CaseKind.BIVARIATE}

SEQUENCE_OPERATIONS = {
    Operation.REVERT_SEQ,
    Operation.ROW_SUMS,
    Operation.INITIAL_COLUMN,
    Operation.FORMULA,
}


class CFLevel(BaseModel):
    """One level of an explicit continued fraction; each x-coefficient is a rational or a list of y-coefficients."""

    numerator: List[str | List[str]]
    denominator: List[str | List[str]]

    @field_validator("numerator", "denominator", mode="before")
    @classmethod
    def normalize_coefficients(cls, value: Any) -> Any:
        if not isinstance(value, list) or not value:
            raise ValueError("expected a non-empty list of x-coefficients")
        return [
            [_exact_text(c) for c in item] if isinstance(item, list) else _exact_text(item)
            for item in value
        ]


class CFSource(BaseModel):
    builder: str | None = None
    param: str | None = None
    levels: List[CFLevel] = Field(default_factory=list)
    repeat_last: bool = True
    y: str | None = None

    @field_validator("param", "y", mode="before")
    @classmethod
    def normalize_numbers(cls, value: Any) -> Any:
        return None if value is None else _exact_text(value)

    @model_validator(mode="after")
    def exactly_one_definition(self) -> "CFSource":
        if (self.builder is None) == (not self.levels):
            raise ValueError("a continued fraction needs either 'builder' or 'levels'")
        return self


class CaseSource(BaseModel):
    g: str | None = None
    f: str | None = None
    u: str | None = None
    v: str | None = None
    seq: List[str] | None = None
    rows: List[List[str]] | None = None
    family: str | None = None
    param: str | None = None
    formula: str | None = None
    cf: CFSource | None = None
    invert_alpha: str | None = None
    reverse: bool = False

    @field_validator("seq", mode="before")
    @classmethod
    def normalize_seq(cls, value: Any) -> Any:
        if value is None:
            return None
        if isinstance(value, str):
            value = value.split(",")
        return [_exact_text(v) for v in value]

    @field_validator("rows", mode="before")
    @classmethod
    def normalize_rows(cls, value: Any) -> Any:
        if value is None:
            return None
        return [[_exact_text(v) for v in row] for row in value]

    @field_validator("param", "invert_alpha", mode="before")
    @classmethod
    def normalize_numbers(cls, value: Any) -> Any:
        return None if value is None else _exact_text(value)

    @field_validator("family")
    @classmethod
    def known_family(cls, value: str | None) -> str | None:
        if value is not None and value.upper() not in Family.__members__:
            raise ValueError(f"unknown family '{value}'")
        return value.upper() if value is not None else None

    @field_validator("rows")
    @classmethod
    def rows_fit_triangle(cls, value: List[List[str]] | None) -> List[List[str]] | None:
        if value is not None:
            for n, row in enumerate(value):
                if len(row) > n + 1:
                    raise ValueError(f"source row {n} has {len(row)} entries; at most {n + 1} allowed")
        return value


class Discrepancy(BaseModel):
    """How a known-discrepancy case must fail: a first mismatch at [n, k] or an error class."""

    at: List[int] | None = None
    error: str | None = None

    @model_validator(mode="after")
    def exactly_one(self) -> "Discrepancy":
        if (self.at is None) == (self.error is None):
            raise ValueError("discrepancy needs exactly one of 'at' or 'error'")
        if self.at is not None and len(self.at) != 2:
            raise ValueError("discrepancy 'at' must be [n, k]")
        return self


class CorpusCase(BaseModel):
    id: str
    kind: CaseKind
    operation: Operation
    source: CaseSource
    expected: List[List[str]] | List[str]
    of: RowSumTarget = RowSumTarget.MATRIX
    # power of the binomial matrix applied on the left before the operation reads the triangle
    binomial: int = 0
    order: int | None = Field(default=None, ge=0)
    oeis: str | None = None
    expectation: Expectation = Expectation.PASS
    discrepancy: Discrepancy | None = None
    note: str | None = None

    @field_validator("expected", mode="before")
    @classmethod
    def normalize_expected(cls, value: Any) -> Any:
        if not isinstance(value, list) or not value:
            raise ValueError("expected must be a non-empty list of rows or terms")
        if all(isinstance(row, list) for row in value):
            return [[_exact_text(v) for v in row] for row in value]
        if any(isinstance(row, list) for row in value):
            raise ValueError("expected mixes rows and terms")
        return [_exact_text(v) for v in value]

    @model_validator(mode="after")
    def validate_case(self) -> "CorpusCase":
        """Check operation/kind compatibility, expected shape and the source fields each kind needs."""
        errors: list[str] = []

        if self.operation not in _ALLOWED_OPERATIONS[self.kind]:
            errors.append(f"operation '{self.operation.value}' is not defined for kind '{self.kind.value}'")

        wants_sequence = self.operation in SEQUENCE_OPERATIONS or (
            self.operation is Operation.CF_EVAL and self.source.cf is not None and self.source.cf.y is not None
        )
        if wants_sequence and self.is_triangle:
            errors.append("expected must be a flat list of terms for this operation")
        if not wants_sequence and not self.is_triangle:
            errors.append("expected must be a list of rows for this operation")
        if self.is_triangle:
            for n, row in enumerate(self.expected):
                if len(row) != n + 1:
                    errors.append(f"expected row {n} has {len(row)} entries, expected {n + 1}")

        src = self.source
        if self.kind is CaseKind.ORDINARY and not (src.family or (src.g and src.f)):
            errors.append("ordinary cases need 'g' and 'f' or a 'family'")
        if src.family and src.param is None:
            errors.append("family cases need 'param'")
        if self.kind is CaseKind.EXPONENTIAL and not (src.u and src.v):
            errors.append("exponential cases need 'u' and 'v'")
        if self.kind is CaseKind.BIVARIATE and not (src.rows or (src.g and src.f)):
            errors.append("bivariate cases need 'rows' or 'g' and 'f'")
        if self.operation is Operation.REVERT_SEQ and not (src.seq or src.g):
            errors.append("revert_seq needs 'seq' or 'g'")
        if self.operation is Operation.FORMULA and not src.formula:
            errors.append("formula cases need 'formula'")
        if self.kind is CaseKind.CF and src.cf is None:
            errors.append("cf cases need 'cf'")
        if self.binomial and (self.kind not in _BINOMIAL_KINDS or self.operation is Operation.INVERSE):
            errors.append("'binomial' only applies to matrix, bang and row operations of array cases")

        if self.expectation is Expectation.KNOWN_DISCREPANCY and self.discrepancy is None:
            errors.append("known_discrepancy cases must record their 'discrepancy'")
        if self.expectation is Expectation.PASS and self.discrepancy is not None:
            errors.append("'discrepancy' is only allowed on known_discrepancy cases")

        if errors:
            raise ValueError("; ".join(errors))
        return self

    @property
    def is_triangle(self) -> bool:
        return bool(self.expected) and isinstance(self.expected[0], list)

    @property
    def rows_to_compute(self) -> int:
        """Truncation order: the override, else one less than the printed length."""
        return self.order if self.order is not None else len(self.expected) - 1

    def expected_values(self) -> List[List[Fraction]] | List[Fraction]:
        if self.is_triangle:
            return [[to_rational(v) for v in row] for row in self.expected]
        return [to_rational(v) for v in self.expected]


class Corpus(BaseModel):
    cases: List[CorpusCase] = Field(default_factory=list)

    @model_validator(mode="after")
    def unique_ids(self) -> "Corpus":
        seen: set[str] = set()
        duplicates: set[str] = set()
        for case in self.cases:
            if case.id in seen:
                duplicates.add(case.id)
            seen.add(case.id)
        if duplicates:
            raise ValueError(f"duplicate case ids: {', '.join(sorted(duplicates))}")
        return self

    @classmethod
    def from_dict(cls, corpus_dict: Dict[str, Any] | List[Any]) -> "Corpus":
        """
        Create a Corpus from data loaded from YAML.

        Accepts either a mapping with a ``cases`` list or a bare list of cases.

        Raises:
            ValidationError: If any case is invalid
        """
        if isinstance(corpus_dict, list):
            corpus_dict = {"cases": corpus_dict}
        try:
            return cls.model_validate(corpus_dict)
        except ValidationError as e:
            logger.error("Corpus validation failed: %s", str(e))
            raise


class Mismatch(BaseModel):
    n: int
    k: int
    got: str
    want: str


class CaseStatus(str, Enum):
    PASS = "pass"
    FAIL = "fail"


class CaseReport(BaseModel):
    id: str
    status: CaseStatus
    expectation: Expectation = Expectation.PASS
    first_mismatch: Mismatch | None = None
    error: str | None = None
    error_type: str | None = None
    as_expected: bool = True
    oeis: str | None = None


class CorpusSummary(BaseModel):
    total: int
    passed: int
    failed: int
    known_discrepancies: int
    unexpected: List[str] = Field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.unexpected

    @classmethod
    def from_reports(cls, reports: List[CaseReport]) -> "CorpusSummary":
        return cls(
            total=len(reports),
            passed=sum(1 for r in reports if r.status is CaseStatus.PASS),
            failed=sum(1 for r in reports if r.status is CaseStatus.FAIL),
            known_discrepancies=sum(
                1 for r in reports if r.expectation is Expectation.KNOWN_DISCREPANCY
            ),
            unexpected=[r.id for r in reports if not r.as_expected],
        )
