"""
Ordinary Riordan arrays (g, f): t(n,k) = [x^n] g f^k.

Specs are lazy: ``g`` and ``f`` are series suppliers and every rendering asks
them for exactly the prefix it needs.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import overload

from riordan_inversion.core.errors import IndexAboveDiagonal, InvalidRiordanPair
from riordan_inversion.core.expressions import parse_series
from riordan_inversion.core.numbers import binomial, to_rational
from riordan_inversion.core.rings import QQ, QQ_Y, Y
from riordan_inversion.core.series import (
    SeriesSupplier,
    XSeries,
    compose,
    differentiate,
    reciprocal,
)
from riordan_inversion.core.triangle import Provenance, SequenceView, Triangle

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RiordanSpec:
    """A pair (g, f) with g(0) != 0, f(0) == 0 and f'(0) != 0."""

    g: SeriesSupplier
    f: SeriesSupplier
    name: str = ""

    def __post_init__(self) -> None:
        g1, f1 = self.g(1), self.f(1)
        if g1[0] == 0:
            raise InvalidRiordanPair(f"{self.label}: g(0) must be non-zero")
        if f1[0] != 0:
            raise InvalidRiordanPair(f"{self.label}: f(0) must be zero, got {f1[0]}")
        if f1[1] == 0:
            raise InvalidRiordanPair(f"{self.label}: f'(0) must be non-zero")

    @property
    def label(self) -> str:
        return self.name or f"({self.g.name}, {self.f.name})"

    @classmethod
    def parse(cls, g_text: str, f_text: str, name: str = "") -> "RiordanSpec":
        return cls(parse_series(g_text), parse_series(f_text), name)

    @classmethod
    def identity(cls) -> "RiordanSpec":
        return cls(SeriesSupplier.constant(1), SeriesSupplier.x(), "(1, x)")

    @classmethod
    def bell(cls, g: SeriesSupplier, name: str = "") -> "RiordanSpec":
        return cls(g, g.mul_x(), name or f"({g.name}, x*{g.name})")

    @classmethod
    def appell(cls, g: SeriesSupplier, name: str = "") -> "RiordanSpec":
        return cls(g, SeriesSupplier.x(), name or f"({g.name}, x)")

    @classmethod
    def lagrange(cls, f: SeriesSupplier, name: str = "") -> "RiordanSpec":
        return cls(SeriesSupplier.constant(1), f, name or f"(1, {f.name})")


BINOMIAL = RiordanSpec.parse("pow:-1,-1", "x*pow:-1,-1", "binomial matrix")
INVERSE_BINOMIAL = RiordanSpec.parse("pow:1,-1", "x*pow:1,-1", "inverse binomial matrix")


def element_at(spec: RiordanSpec, n: int, k: int) -> Fraction:
    if k > n:
        raise IndexAboveDiagonal(n, k)
    return (spec.g(n) * spec.f(n) ** k)[n]


def to_matrix(spec: RiordanSpec, order: int) -> Triangle:
    g, f = spec.g(order), spec.f(order)
    rows: list[list[Fraction]] = [[] for _ in range(order + 1)]
    column = g
    for k in range(order + 1):
        for n in range(k, order + 1):
            rows[n].append(column[n])
        column = column * f
    return Triangle(rows)


def bivariate_gf(spec: RiordanSpec) -> SeriesSupplier:
    """G(x, y) = g / (1 - y f) as a supplier over QQ[y]."""

    def generate(order: int) -> XSeries:
        g = spec.g(order).change_ring(QQ_Y)
        denominator = XSeries.one(order, QQ_Y) - spec.f(order).change_ring(QQ_Y) * Y
        return g * reciprocal(denominator)

    return SeriesSupplier(generate, f"G{spec.label}", QQ_Y)


def product(a: RiordanSpec, b: RiordanSpec) -> RiordanSpec:
    """(g, f) . (u, v) = (g u(f), v(f))."""
    return RiordanSpec(
        a.g * b.g.compose(a.f),
        b.f.compose(a.f),
        f"{a.label}·{b.label}",
    )


def inverse(a: RiordanSpec) -> RiordanSpec:
    """(g, f)^-1 = (1/g(fbar), fbar)."""
    f_bar = a.f.revert()
    return RiordanSpec(a.g.compose(f_bar).reciprocal(), f_bar, f"{a.label}^-1")


def ftra_apply(spec: RiordanSpec, h: SeriesSupplier, order: int) -> SequenceView:
    """Action of the array on a generating function: g h(f)."""
    result = spec.g(order) * compose(h(order), spec.f(order))
    return SequenceView(result.coeffs)


class Subgroup(str, Enum):
    APPELL = "Appell"
    LAGRANGE = "Lagrange"
    BELL = "Bell"
    DERIVATIVE = "Derivative"


def classify_subgroup(spec: RiordanSpec, order: int) -> frozenset[Subgroup]:
    """Subgroup membership, decided on the prefixes through x^order."""
    g, f = spec.g(order), spec.f(order)
    found: set[Subgroup] = set()
    if f == XSeries.x(order):
        found.add(Subgroup.APPELL)
    if g == XSeries.one(order):
        found.add(Subgroup.LAGRANGE)
    if order == 0 or f == g.mul_x().truncate(order):
        found.add(Subgroup.BELL)
    if g == differentiate(spec.f(order + 1)):
        found.add(Subgroup.DERIVATIVE)
    return frozenset(found)


class Direction(str, Enum):
    FORWARD = "forward"
    INVERSE = "inverse"


@overload
def binomial_transform(value: SequenceView, direction: Direction = ...) -> SequenceView: ...
@overload
def binomial_transform(value: Triangle, direction: Direction = ...) -> Triangle: ...


def binomial_transform(value, direction: Direction = Direction.FORWARD):
    """Multiply by the binomial matrix B or by B^-1 (triangles on the left)."""
    sign = 1 if direction is Direction.FORWARD else -1
    if isinstance(value, Triangle):
        pascal = Triangle.from_function(
            value.order, lambda n, k: binomial(n, k) * sign ** (n - k)
        )
        return pascal @ value
    terms = [
        sum((binomial(n, k) * sign ** (n - k) * value[k] for k in range(n + 1)), Fraction(0))
        for n in range(len(value))
    ]
    return SequenceView(tuple(terms), value.provenance)


def binomial_power(t: Triangle, power: int) -> Triangle:
    """B^power @ t; negative powers apply the inverse binomial transform."""
    direction = Direction.FORWARD if power >= 0 else Direction.INVERSE
    for _ in range(abs(power)):
        t = binomial_transform(t, direction)
    return t


def invert_alpha(g: SeriesSupplier, alpha: Fraction | int | str) -> SeriesSupplier:
    """The invert(alpha) transform g / (1 - alpha x g)."""
    alpha = to_rational(alpha)

    def generate(order: int) -> XSeries:
        series = g(order)
        return series * reciprocal(1 - series.mul_x().truncate(order) * alpha)

    return SeriesSupplier(generate, f"invert({alpha})({g.name})", g.ring)


def invert_transform_array(spec: RiordanSpec, alpha: Fraction | int | str) -> RiordanSpec:
    """(g / (1 - alpha x g), f / (1 - alpha x g)); its bivariate gf is G / (1 - alpha x G)."""
    alpha = to_rational(alpha)

    def damping(order: int) -> XSeries:
        return reciprocal(1 - spec.g(order).mul_x().truncate(order) * alpha)

    scale = SeriesSupplier(damping, f"1/(1-{alpha}x*{spec.g.name})")
    return RiordanSpec(spec.g * scale, spec.f * scale, f"invert({alpha}){spec.label}")


def reversal(t: Triangle) -> Triangle:
    return t.reversal()


def row_sums(t: Triangle) -> SequenceView:
    return t.row_sums()


def initial_column(t: Triangle) -> SequenceView:
    return t.initial_column()


def sequence_of(series: XSeries, provenance: Provenance = Provenance.CUSTOM) -> SequenceView:
    return SequenceView(series.coeffs, provenance)
