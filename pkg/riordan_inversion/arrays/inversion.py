"""
The inversion operator on arrays.

For an array with bivariate generating function G(x, y) the inversion is the
array whose generating function is (1/x) Rev_x(x G(x, y)), the reversion being
taken in x over QQ[y]. Entries are written t^(n,k) below.
"""

import logging
from fractions import Fraction

from riordan_inversion.arrays.exp_riordan import ExpRiordanSpec, exp_to_matrix
from riordan_inversion.arrays.riordan import (
    Direction,
    RiordanSpec,
    binomial_transform,
    bivariate_gf,
    invert_alpha,
    product,
    to_matrix,
)
from riordan_inversion.core.errors import IndexAboveDiagonal, NotAppell, NotLagrange
from riordan_inversion.core.numbers import binomial
from riordan_inversion.core.rings import QQ_Y
from riordan_inversion.core.series import (
    SeriesSupplier,
    XSeries,
    borel,
    inv_borel,
    reciprocal,
    revert,
)
from riordan_inversion.core.triangle import Provenance, SequenceView, Triangle

logger = logging.getLogger(__name__)

# A bivariate generating function is a supplier of series in x over QQ[y].
BivariateGF = SeriesSupplier


def bang_series(G: XSeries) -> XSeries:
    """(1/x) Rev(x G) for a prefix G over QQ[y]; the result has the same order."""
    G = G.change_ring(QQ_Y)
    return revert(G.mul_x()).div_x()


def bang_supplier(G: BivariateGF) -> BivariateGF:
    return SeriesSupplier(lambda order: bang_series(G(order)), f"({G.name})!", QQ_Y)


def bang_bivariate(G: BivariateGF, order: int) -> Triangle:
    """t^(n,k) = [x^n y^k] (1/x) Rev(x G); the output must be lower-triangular."""
    logger.debug("Inverting %s through row %d", G.name, order)
    return Triangle.from_bivariate(bang_series(G(order)), strict=True)


def bang_of_triangle(t: Triangle) -> Triangle:
    """Inversion of an array given only by its rows 0..N."""
    return Triangle.from_bivariate(bang_series(t.to_bivariate()), strict=True)


def bang_riordan(spec: RiordanSpec, order: int) -> Triangle:
    return bang_bivariate(bivariate_gf(spec), order)


def _prefactor(n: int, k: int) -> Fraction:
    return (-1) ** k * binomial(n + 1, k) / (n + 1)


def bang_closed_term(spec: RiordanSpec, n: int, k: int) -> Fraction:
    """t^(n,k) = ((-1)^k / (n+1)) C(n+1, k) [x^n] f^k (1/g)^(n+1)."""
    if k > n:
        raise IndexAboveDiagonal(n, k)
    inner = spec.f(n) ** k * reciprocal(spec.g(n)) ** (n + 1)
    return _prefactor(n, k) * inner[n]


def derivative_factor(spec: RiordanSpec) -> RiordanSpec:
    """((Rev(x g))', Rev(x g)), a member of the derivative subgroup."""
    w = spec.g.mul_x().revert()
    return RiordanSpec(w.derivative(), w, f"((Rev x{spec.g.name})', Rev x{spec.g.name})")


def factorized_spec(spec: RiordanSpec) -> RiordanSpec:
    """((Rev(x g))', Rev(x g)) . (1, f), i.e. ((Rev(x g))', f(Rev(x g)))."""
    return product(derivative_factor(spec), RiordanSpec.lagrange(spec.f))


def factorized_bang(spec: RiordanSpec, order: int) -> Triangle:
    inner = to_matrix(factorized_spec(spec), order)
    return inner.map(lambda n, k, value: _prefactor(n, k) * value)


def appell_identity(spec: RiordanSpec, order: int) -> tuple[Triangle, Triangle]:
    """
    Both sides of ((Rev(x g))', Rev(x g)) = ((x g)', x g)^-1 for an Appell array.

    Returns (left, right); they are equal whenever the identity holds.
    """
    if spec.f(order) != XSeries.x(order):
        raise NotAppell(f"{spec.label} is not an Appell array (f != x)")
    left = to_matrix(derivative_factor(spec), order)
    xg = spec.g.mul_x()
    right = to_matrix(RiordanSpec(xg.derivative(), xg), order).inverse()
    return left, right


def lagrange_subgroup_bang(spec: RiordanSpec, order: int) -> Triangle:
    """For g == 1 the inversion is an entrywise rescaling of the array itself."""
    if spec.g(order) != XSeries.one(order):
        raise NotLagrange(f"{spec.label} is not a Lagrange array (g != 1)")
    return to_matrix(spec, order).map(lambda n, k, value: _prefactor(n, k) * value)


def revert_transform(g: SeriesSupplier) -> SeriesSupplier:
    """g -> (1/x) Rev(x g); an involution on series with a unit constant term."""
    return SeriesSupplier(
        lambda order: revert(g(order).mul_x()).div_x(), f"revert({g.name})", g.ring
    )


def revert_transform_sequence(g: SeriesSupplier, order: int) -> SequenceView:
    return SequenceView(revert_transform(g)(order).coeffs)


def revert_transform_terms(terms: SequenceView | list[Fraction]) -> SequenceView:
    values = list(terms)
    supplier = SeriesSupplier.from_coefficients(values)
    return revert_transform_sequence(supplier, len(values) - 1)


def bell_bang_exp(g: SeriesSupplier, order: int) -> tuple[ExpRiordanSpec, Triangle]:
    """The inversion of the Bell matrix (g, x g) is the exponential array [revert(g)_e, -x]."""
    u = revert_transform(g).map(borel, f"revert({g.name})_e")
    spec = ExpRiordanSpec(u, SeriesSupplier.from_coefficients([0, -1], "-x"))
    return spec, exp_to_matrix(spec, order)


def bell_source_from_exp(u: SeriesSupplier) -> RiordanSpec:
    """The Bell matrix whose inversion is the exponential array [u, -x]."""
    g = revert_transform(u.map(inv_borel, f"({u.name})^o"))
    return RiordanSpec.bell(g)


def prop1_check(g: SeriesSupplier, order: int) -> bool:
    """The revert transform of invert(1)(g) is the inverse binomial transform of revert(g)."""
    left = revert_transform_sequence(invert_alpha(g, 1), order)
    right = binomial_transform(revert_transform_sequence(g, order), Direction.INVERSE)
    return left.terms == right.terms


def is_self_dual(spec: RiordanSpec, order: int) -> bool:
    return bang_riordan(spec, order) == to_matrix(spec, order)


def is_involution(spec: RiordanSpec, order: int) -> bool:
    return to_matrix(product(spec, spec), order) == Triangle.identity(order)


def bang_reversal_commutes(spec: RiordanSpec, order: int) -> bool:
    """The inversion of the reversal of an array is the reversal of its inversion."""
    reversed_array = to_matrix(spec, order).reversal()
    return bang_riordan(spec, order).reversal() == bang_of_triangle(reversed_array)


def initial_column_law_holds(t: Triangle) -> bool:
    """Column 0 of the inversion is the revert transform of G(x, 0)."""
    expected = revert_transform_terms(t.initial_column())
    return bang_of_triangle(t).initial_column().terms == expected.terms


def row_sum_law_holds(t: Triangle) -> bool:
    """Row sums of the inversion are the revert transform of the row sums."""
    expected = revert_transform_terms(t.row_sums())
    return bang_of_triangle(t).row_sums().terms == expected.terms


def inversion_row_sums(t: Triangle) -> SequenceView:
    return SequenceView(bang_of_triangle(t).row_sums().terms, Provenance.ROW_SUMS)
