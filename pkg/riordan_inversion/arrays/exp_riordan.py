"""
Exponential Riordan arrays [u, v]: t(n,k) = (n!/k!) [x^n] u v^k.

The inversion of an exponential array with bivariate egf G_e(x, y) is
d/dx Rev(integral of G_e); the n! extraction happens only when a triangle is
rendered, so ordinary and exponential inversions share one reversion kernel.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction

from riordan_inversion.core.errors import IndexAboveDiagonal, InvalidRiordanPair
from riordan_inversion.core.expressions import parse_series
from riordan_inversion.core.numbers import factorial
from riordan_inversion.core.rings import QQ, QQ_Y, PolyInY, Ring, Y
from riordan_inversion.core.series import (
    SeriesSupplier,
    XSeries,
    compose,
    differentiate,
    exp_log,
    integrate,
    inv_borel,
    reciprocal,
    revert,
)
from riordan_inversion.core.triangle import Provenance, SequenceView, Triangle

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ExpRiordanSpec:
    u: SeriesSupplier
    v: SeriesSupplier
    name: str = ""
    ring: Ring = QQ

    def __post_init__(self) -> None:
        u1, v1 = self.u(1), self.v(1)
        if not self.ring.is_unit(u1[0]):
            raise InvalidRiordanPair(f"{self.label}: u(0) must be a unit")
        if v1[0] != 0:
            raise InvalidRiordanPair(f"{self.label}: v(0) must be zero, got {v1[0]}")
        if not self.ring.is_unit(v1[1]):
            raise InvalidRiordanPair(f"{self.label}: v'(0) must be a unit")

    @property
    def label(self) -> str:
        return self.name or f"[{self.u.name}, {self.v.name}]"

    @classmethod
    def parse(cls, u_text: str, v_text: str, name: str = "") -> "ExpRiordanSpec":
        return cls(parse_series(u_text), parse_series(v_text), name)


def exp_element_at(spec: ExpRiordanSpec, n: int, k: int) -> Fraction:
    if k > n:
        raise IndexAboveDiagonal(n, k)
    return (spec.u(n) * spec.v(n) ** k)[n] * factorial(n) / factorial(k)


def exp_to_matrix(spec: ExpRiordanSpec, order: int) -> Triangle:
    u, v = spec.u(order), spec.v(order)
    rows: list[list] = [[] for _ in range(order + 1)]
    column = u
    for k in range(order + 1):
        for n in range(k, order + 1):
            rows[n].append(column[n] * factorial(n) / factorial(k))
        column = column * v
    return Triangle(rows, spec.ring)


def exp_bivariate_egf(spec: ExpRiordanSpec) -> SeriesSupplier:
    """G_e(x, y) = u(x) exp(y v(x)); [x^n y^k] G_e = t(n,k) / n!."""

    def generate(order: int) -> XSeries:
        u = spec.u(order).change_ring(QQ_Y)
        return u * exp_log(spec.v(order).change_ring(QQ_Y) * Y, "exp")

    return SeriesSupplier(generate, f"Ge{spec.label}", QQ_Y)


def exp_bang_series(Ge: XSeries) -> XSeries:
    """d/dx Rev(integral of G_e), same order as G_e."""
    return differentiate(revert(integrate(Ge.change_ring(QQ_Y))))


def exp_bang(spec: ExpRiordanSpec, order: int) -> Triangle:
    hat = exp_bang_series(exp_bivariate_egf(spec)(order))
    return Triangle.from_bivariate(inv_borel(hat), strict=True)


def integral_array(spec: ExpRiordanSpec) -> ExpRiordanSpec:
    """The exponential array [1, F] over QQ[y] with F the integral of G_e."""
    Ge = exp_bivariate_egf(spec)
    F = SeriesSupplier(lambda n: integrate(Ge(max(n - 1, 0))).truncate(n), f"∫{Ge.name}", QQ_Y)
    return ExpRiordanSpec(SeriesSupplier.constant(1, QQ_Y), F, f"[1, {F.name}]", QQ_Y)


def inverse_column_polynomials(spec: ExpRiordanSpec, order: int) -> list[PolyInY]:
    """
    p_0..p_order read from the inverse of the exponential array [1, F], F = integral of G_e.

    [1, F]^-1 = [1, Rev F], so entry (n+1, 1) of the inverse is (n+1)! [x^(n+1)] Rev F,
    which is n! [x^n] of the derivative of Rev F.
    """
    inverse_matrix = exp_to_matrix(integral_array(spec), order + 1).inverse()
    return [QQ_Y.coerce(inverse_matrix.entry(n + 1, 1)) for n in range(order + 1)]


def exp_bang_via_inverse_column(spec: ExpRiordanSpec, order: int) -> Triangle:
    polynomials = inverse_column_polynomials(spec, order)
    return Triangle.from_bivariate(XSeries(polynomials, QQ_Y), strict=True)


def exp_inverse(spec: ExpRiordanSpec) -> ExpRiordanSpec:
    """[u, v]^-1 = [1/u(vbar), vbar]."""
    v_bar = spec.v.revert()
    u_new = SeriesSupplier(
        lambda order: reciprocal(compose(spec.u(order), v_bar(order))),
        f"1/{spec.u.name}(vbar)",
        spec.ring,
    )
    return ExpRiordanSpec(u_new, v_bar, f"{spec.label}^-1", spec.ring)


def exponential_revert_transform(u: SeriesSupplier, order: int) -> SequenceView:
    """n! [x^n] d/dx Rev(integral of u), for u(0) a unit."""
    hat = differentiate(revert(integrate(u(order))))
    return SequenceView(inv_borel(hat).coeffs)


def airey_row_sums(order: int) -> SequenceView:
    """Row sums of [cosh x, x]!, the exponential revert transform of e^x cosh x."""
    source = parse_series("exp") * parse_series("cosh")
    return SequenceView(exponential_revert_transform(source, order).terms, Provenance.ROW_SUMS)
