"""
Continued fractions with polynomial partial numerators and denominators.

A continued fraction is evaluated as

    n0 / (d0 + n1 / (d1 + n2 / (d2 + ...)))

where level i contributes the x-polynomials n_i and d_i with coefficients in
QQ[y]. Subtracted levels are written with a negative numerator.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable, Sequence

from riordan_inversion.arrays.inversion import bang_series
from riordan_inversion.arrays.riordan import RiordanSpec, bivariate_gf
from riordan_inversion.core.errors import NoStabilization, NonUnitConstantTerm, NonUnitDenominator
from riordan_inversion.core.rings import QQ_Y, Y
from riordan_inversion.core.series import SeriesSupplier, XSeries, reciprocal
from riordan_inversion.core.triangle import Triangle

logger = logging.getLogger(__name__)

# level index -> coefficients of an x-polynomial over QQ[y], lowest degree first
LevelFunction = Callable[[int], Sequence[Any]]


@dataclass(frozen=True)
class FixedDepth:
    depth: int


@dataclass(frozen=True)
class Stabilize:
    """Deepen until the prefix through the evaluation order stops changing."""


DepthPolicy = FixedDepth | Stabilize


@dataclass(frozen=True)
class CFSpec:
    numerator: LevelFunction
    denominator: LevelFunction
    depth_policy: DepthPolicy = field(default_factory=Stabilize)
    name: str = "cf"

    def level(self, i: int, order: int) -> tuple[XSeries, XSeries]:
        return (
            XSeries.from_prefix(QQ_Y.coerce_all(list(self.numerator(i))), order, QQ_Y),
            XSeries.from_prefix(QQ_Y.coerce_all(list(self.denominator(i))), order, QQ_Y),
        )


def _invert(series: XSeries, level: int) -> XSeries:
    try:
        return reciprocal(series)
    except NonUnitConstantTerm as exc:
        raise NonUnitDenominator(
            f"level {level} has constant term {series[0]}, which is not a unit"
        ) from exc


def eval_at_depth(cf: CFSpec, order: int, depth: int) -> XSeries:
    """Evaluate levels 0..depth bottom-up."""
    numerator, tail = cf.level(depth, order)
    for i in range(depth, 0, -1):
        upper_numerator, upper_denominator = cf.level(i - 1, order)
        tail = upper_denominator + numerator * _invert(tail, i)
        numerator = upper_numerator
    return numerator * _invert(tail, 0)


def eval_cf(cf: CFSpec, order: int) -> XSeries:
    policy = cf.depth_policy
    if isinstance(policy, FixedDepth):
        return eval_at_depth(cf, order, policy.depth)
    depth_cap = 4 * order + 8
    previous = eval_at_depth(cf, order, 0)
    for depth in range(1, depth_cap + 1):
        current = eval_at_depth(cf, order, depth)
        if current == previous:
            logger.debug("%s stabilized through x^%d at depth %d", cf.name, order, depth)
            return current
        previous = current
    raise NoStabilization(order, depth_cap)


def eval_cf_at(cf: CFSpec, order: int, y: Fraction | int) -> XSeries:
    """The continued fraction with y specialized, as a rational series."""
    return XSeries([QQ_Y.coerce(c).evaluate(y) for c in eval_cf(cf, order)])


def verify_cf_against_bang(
    cf: CFSpec,
    spec: RiordanSpec | SeriesSupplier,
    order: int,
    y: Fraction | int | None = None,
) -> bool:
    """
    Compare the continued fraction with the bivariate gf of the inversion.

    ``spec`` is a Riordan pair or a bivariate gf supplier. With ``y`` set, both
    sides are specialized first (y = 1 compares row sums).
    """
    G = bivariate_gf(spec) if isinstance(spec, RiordanSpec) else spec
    expected = bang_series(G(order))
    if y is None:
        return eval_cf(cf, order) == expected
    return list(eval_cf_at(cf, order, y)) == [QQ_Y.coerce(c).evaluate(y) for c in expected]


def cf_triangle(cf: CFSpec, order: int) -> Triangle:
    return Triangle.from_bivariate(eval_cf(cf, order), strict=False)


# builders


def explicit_cf(
    levels: Sequence[tuple[Sequence[Any], Sequence[Any]]],
    repeat_last: bool = True,
    depth_policy: DepthPolicy | None = None,
    name: str = "explicit",
) -> CFSpec:
    """
    A continued fraction from explicit (numerator, denominator) levels.

    Past the last level the final level repeats when ``repeat_last`` is set;
    otherwise the fraction terminates there.
    """
    if not levels:
        raise ValueError("a continued fraction needs at least one level")
    last = len(levels) - 1

    def pick(i: int, part: int) -> Sequence[Any]:
        if i <= last:
            return levels[i][part]
        if repeat_last:
            return levels[last][part]
        return (0,) if part == 0 else (1,)

    if depth_policy is None:
        depth_policy = Stabilize() if repeat_last else FixedDepth(last)
    return CFSpec(lambda i: pick(i, 0), lambda i: pick(i, 1), depth_policy, name)


def gladkovskii_cf() -> CFSpec:
    """1/(1 + x/(1 - 2x + 2x/(1 - 4x + 3x/(1 - 6x + ...)))), the Airey sequence."""
    return CFSpec(
        lambda i: (1,) if i == 0 else (0, i),
        lambda i: (1,) if i == 0 else (1, -2 * i),
        Stabilize(),
        "gladkovskii",
    )


def _jacobi(
    first_denominator: Sequence[Any],
    denominator: Sequence[Any],
    numerator: Callable[[int], Sequence[Any]],
    name: str,
) -> CFSpec:
    return CFSpec(
        lambda i: (1,) if i == 0 else numerator(i),
        lambda i: first_denominator if i == 0 else denominator,
        Stabilize(),
        name,
    )


def pascal_like_cf(r: Fraction | int) -> CFSpec:
    """1/(1 - (1+y)x - r y x^2/(1 - (1+y)x - ...)), the Pascal-like inversions."""
    b = -(1 + Y)
    lam = -(Y * Fraction(r))
    return _jacobi((1, b), (1, b), lambda _i: (0, 0, lam), f"pascal_like({r})")


def pascal_row_sum_cf(r: Fraction | int) -> CFSpec:
    """1/(1 - 2x - r x^2/(1 - 2x - ...)), the Pascal-like row sums."""
    return _jacobi((1, -2), (1, -2), lambda _i: (0, 0, -Fraction(r)), f"pascal_row_sums({r})")


def one_plus_rx_cf(r: Fraction | int, printed: bool = False) -> CFSpec:
    """
    1/(1 + (y+r)x - r(y+r)x^2/(1 + (y+2r)x - r(y+r)x^2/(...))), the (1+rx, x) inversions.

    ``printed`` drops the x^2 to x from level 2 on, which changes the expansion at x^3.
    """
    r = Fraction(r)
    lam = -(r * (Y + r))

    def numerator(i: int) -> Sequence[Any]:
        return (0, lam) if printed and i >= 2 else (0, 0, lam)

    return _jacobi((1, Y + r), (1, Y + 2 * r), numerator, f"one_plus_rx({r}{', printed' if printed else ''})")


def second_family_cf(r: Fraction | int, printed: bool = False) -> CFSpec:
    """
    1/(1 - (y+r)x - r(y+r-1)x^2/(1 - (y+2r-1)x - ...)), the second-family inversions.

    ``printed`` uses the constant level-2 numerator r(y+r-1); the next level then
    has a non-unit constant term.
    """
    r = Fraction(r)
    lam = -(r * (Y + r - 1))

    def numerator(i: int) -> Sequence[Any]:
        return (lam,) if printed and i >= 2 else (0, 0, lam)

    return _jacobi(
        (1, -(Y + r)), (1, -(Y + 2 * r - 1)), numerator, f"second_family({r}{', printed' if printed else ''})"
    )


CF_BUILDERS: dict[str, Callable[..., CFSpec]] = {
    "gladkovskii": lambda _r=None: gladkovskii_cf(),
    "pascal_like": pascal_like_cf,
    "pascal_row_sums": pascal_row_sum_cf,
    "one_plus_rx": one_plus_rx_cf,
    "one_plus_rx_printed": lambda r: one_plus_rx_cf(r, printed=True),
    "second_family": second_family_cf,
    "second_family_printed": lambda r: second_family_cf(r, printed=True),
}
