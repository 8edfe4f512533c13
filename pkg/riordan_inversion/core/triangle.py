"""Lower-triangular matrices (rendered arrays) and the sequences read off them."""

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Any, Callable, Iterator, Sequence

from riordan_inversion.core.errors import (
    IndexAboveDiagonal,
    NonIntegralEntry,
    NotInvertible,
    TriangularSupportError,
)
from riordan_inversion.core.numbers import format_rational
from riordan_inversion.core.rings import QQ, QQ_Y, PolyInY, Ring
from riordan_inversion.core.series import XSeries


class Triangle:
    """
    Lower-triangular matrix with rows 0..N; row n holds t(n,0)..t(n,n).

    Entries live in ``ring`` (rationals by default). Entries above the diagonal
    are not stored and are zero by definition.
    """

    __slots__ = ("_rows", "_ring")

    def __init__(self, rows: Sequence[Sequence[Any]], ring: Ring = QQ):
        normalized = []
        for n, row in enumerate(rows):
            if len(row) != n + 1:
                raise ValueError(f"row {n} has {len(row)} entries, expected {n + 1}")
            normalized.append(tuple(ring.coerce_all(row)))
        if not normalized:
            raise ValueError("a triangle needs at least row 0")
        self._rows: tuple[tuple[Any, ...], ...] = tuple(normalized)
        self._ring = ring

    @classmethod
    def identity(cls, order: int, ring: Ring = QQ) -> "Triangle":
        return cls(
            [[ring.one if k == n else ring.zero for k in range(n + 1)] for n in range(order + 1)],
            ring,
        )

    @classmethod
    def from_function(
        cls, order: int, entry: Callable[[int, int], Any], ring: Ring = QQ
    ) -> "Triangle":
        return cls([[entry(n, k) for k in range(n + 1)] for n in range(order + 1)], ring)

    @classmethod
    def from_bivariate(cls, series: XSeries, strict: bool = True) -> "Triangle":
        """
        Read t(n,k) = [x^n y^k] of a series over QQ[y].

        With ``strict`` a coefficient y^k with k > n raises TriangularSupportError;
        otherwise such coefficients are dropped.
        """
        rows = []
        for n in range(series.order + 1):
            poly = QQ_Y.coerce(series[n])
            if strict and poly.degree > n:
                raise TriangularSupportError(
                    f"[x^{n}] has degree {poly.degree} in y; the result is not lower-triangular"
                )
            rows.append([poly.coeff(k) for k in range(n + 1)])
        return cls(rows)

    @property
    def order(self) -> int:
        return len(self._rows) - 1

    @property
    def ring(self) -> Ring:
        return self._ring

    @property
    def rows(self) -> tuple[tuple[Any, ...], ...]:
        return self._rows

    def __len__(self) -> int:
        return len(self._rows)

    def __iter__(self) -> Iterator[tuple[Any, ...]]:
        return iter(self._rows)

    def entry(self, n: int, k: int) -> Any:
        if k > n:
            raise IndexAboveDiagonal(n, k)
        if n > self.order or k < 0:
            raise IndexError(f"entry ({n}, {k}) is outside a triangle of order {self.order}")
        return self._rows[n][k]

    def truncate(self, order: int) -> "Triangle":
        if order > self.order:
            raise ValueError(f"cannot extend a triangle of order {self.order}")
        return Triangle(self._rows[: order + 1], self._ring)

    def map(self, fn: Callable[[int, int, Any], Any], ring: Ring | None = None) -> "Triangle":
        return Triangle(
            [[fn(n, k, value) for k, value in enumerate(row)] for n, row in enumerate(self._rows)],
            ring or self._ring,
        )

    def __matmul__(self, other: "Triangle") -> "Triangle":
        if not isinstance(other, Triangle):
            return NotImplemented
        ring = self._ring if self._ring is other._ring else QQ_Y
        order = min(self.order, other.order)
        rows = []
        for n in range(order + 1):
            row = []
            for k in range(n + 1):
                total = ring.zero
                for j in range(k, n + 1):
                    a = self._rows[n][j]
                    if a:
                        total = total + a * other._rows[j][k]
                row.append(total)
            rows.append(row)
        return Triangle(rows, ring)

    def inverse(self) -> "Triangle":
        """Exact inverse by forward substitution; the diagonal must consist of units."""
        ring = self._ring
        size = len(self._rows)
        inv: list[list[Any]] = []
        for n in range(size):
            try:
                pivot = ring.inverse(self._rows[n][n])
            except NotInvertible as exc:
                raise NotInvertible(f"diagonal entry ({n}, {n}) is not a unit") from exc
            row = [ring.zero] * (n + 1)
            row[n] = pivot
            for k in range(n):
                total = ring.zero
                for j in range(k, n):
                    a = self._rows[n][j]
                    if a:
                        total = total + a * inv[j][k]
                row[k] = -(pivot * total)
            inv.append(row)
        return Triangle(inv, ring)

    def apply(self, vector: Sequence[Any]) -> list[Any]:
        """Matrix times column vector, truncated to the triangle's order."""
        return [
            sum((self._rows[n][k] * vector[k] for k in range(n + 1)), self._ring.zero)
            for n in range(len(self._rows))
        ]

    def reversal(self) -> "Triangle":
        return Triangle([tuple(reversed(row)) for row in self._rows], self._ring)

    def to_bivariate(self) -> XSeries:
        return XSeries([PolyInY(row) for row in self._rows], QQ_Y)

    def row_sums(self) -> "SequenceView":
        return SequenceView(
            tuple(sum(row, self._ring.zero) for row in self._rows), Provenance.ROW_SUMS
        )

    def initial_column(self) -> "SequenceView":
        return SequenceView(tuple(row[0] for row in self._rows), Provenance.INITIAL_COLUMN)

    def diagonal(self) -> "SequenceView":
        return SequenceView(tuple(row[-1] for row in self._rows), Provenance.DIAGONAL)

    def is_integral(self) -> bool:
        if self._ring is not QQ:
            return False
        return all(value.denominator == 1 for row in self._rows for value in row)

    def assert_integral(self) -> "Triangle":
        if self._ring is not QQ:
            raise TypeError("integrality is only defined for rational triangles")
        for n, row in enumerate(self._rows):
            for k, value in enumerate(row):
                if value.denominator != 1:
                    raise NonIntegralEntry(n, k, value)
        return self

    def to_strings(self) -> list[list[str]]:
        if self._ring is QQ:
            return [[format_rational(v) for v in row] for row in self._rows]
        return [[str(v) for v in row] for row in self._rows]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Triangle):
            return NotImplemented
        return self._rows == other._rows

    def __hash__(self) -> int:
        return hash(self._rows)

    def __repr__(self) -> str:
        return f"Triangle({self.to_strings()})"


class Provenance(str, Enum):
    INITIAL_COLUMN = "initial_column"
    ROW_SUMS = "row_sums"
    DIAGONAL = "diagonal"
    CUSTOM = "custom"


@dataclass(frozen=True)
class SequenceView:
    terms: tuple[Any, ...]
    provenance: Provenance = Provenance.CUSTOM
    label: str = field(default="", compare=False)

    @classmethod
    def of(cls, terms: Sequence[Any], provenance: Provenance = Provenance.CUSTOM) -> "SequenceView":
        return cls(tuple(Fraction(t) if not isinstance(t, PolyInY) else t for t in terms), provenance)

    def __len__(self) -> int:
        return len(self.terms)

    def __getitem__(self, n: int) -> Any:
        return self.terms[n]

    def __iter__(self):
        return iter(self.terms)

    @property
    def order(self) -> int:
        return len(self.terms) - 1

    def to_series(self) -> XSeries:
        return XSeries(self.terms)

    def to_strings(self) -> list[str]:
        return [format_rational(t) if not isinstance(t, PolyInY) else str(t) for t in self.terms]
