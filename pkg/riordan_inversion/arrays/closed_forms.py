"""
Exact term formulas for the inversions of the one-parameter families.

These are independent of the series pipeline and serve as its oracles.
"""

from enum import Enum
from fractions import Fraction

from pydantic import BaseModel, ConfigDict, field_validator, model_validator

from riordan_inversion.arrays.inversion import bang_riordan, derivative_factor
from riordan_inversion.arrays.riordan import RiordanSpec, binomial_power, to_matrix
from riordan_inversion.core.errors import IndexAboveDiagonal, UnknownFamily
from riordan_inversion.core.expressions import parse_series
from riordan_inversion.core.numbers import binomial, factorial, format_rational, to_rational
from riordan_inversion.core.series import XSeries, exp_log, revert
from riordan_inversion.core.triangle import Provenance, SequenceView, Triangle


class Family(str, Enum):
    ONE_PLUS_RX = "ONE_PLUS_RX"
    SECOND_FAMILY = "SECOND_FAMILY"
    POWER_APPELL = "POWER_APPELL"
    PASCAL_LIKE = "PASCAL_LIKE"
    POWER_LAGRANGE = "POWER_LAGRANGE"


_INTEGER_FAMILIES = {Family.POWER_APPELL, Family.POWER_LAGRANGE}


class FamilyParam(BaseModel):
    """A family and its parameter: r (rational) or m (integer for the power families)."""

    model_config = ConfigDict(frozen=True)

    family: Family
    param: str

    @field_validator("family", mode="before")
    @classmethod
    def normalize_family(cls, value):
        return value.upper() if isinstance(value, str) else value

    @field_validator("param", mode="before")
    @classmethod
    def normalize_param(cls, value) -> str:
        if isinstance(value, (float, bool)):
            raise ValueError("family parameters must be exact rationals")
        if not isinstance(value, (int, Fraction)):
            value = str(value)
        return format_rational(to_rational(value))

    @model_validator(mode="after")
    def check_domain(self) -> "FamilyParam":
        if self.family in _INTEGER_FAMILIES and self.value.denominator != 1:
            raise ValueError(f"{self.family.value} needs an integer m, got {self.param}")
        return self

    @property
    def value(self) -> Fraction:
        return to_rational(self.param)

    @classmethod
    def parse(cls, text: str) -> "FamilyParam":
        """Parse ``NAME:param``, for example ``PASCAL_LIKE:2``."""
        name, sep, param = text.partition(":")
        if not sep:
            raise ValueError(f"expected NAME:param, got {text!r}")
        if name.strip().upper() not in Family.__members__:
            raise UnknownFamily(f"unknown family {name.strip()!r}")
        return cls(family=name.strip(), param=param.strip())

    def __str__(self) -> str:
        return f"{self.family.value}:{self.param}"


def _check_index(n: int, k: int) -> None:
    if k > n:
        raise IndexAboveDiagonal(n, k)
    if n < 0 or k < 0:
        raise ValueError(f"indices must be non-negative, got ({n}, {k})")


def catalan(n: int) -> int:
    return factorial(2 * n) // (factorial(n) * factorial(n + 1))


def narayana(n: int, k: int) -> int:
    """(1/(k+1)) C(n,k) C(n+1,k); row n of the triangle starting 1; 1,1; 1,3,1; ..."""
    _check_index(n, k)
    value = binomial(n, k) * binomial(n + 1, k) / (k + 1)
    return int(value)


def ballot(n: int, k: int) -> int:
    """((n-k+1)/(n+1)) C(n+k, k)."""
    _check_index(n, k)
    value = Fraction(n - k + 1, n + 1) * binomial(n + k, k)
    return int(value)


def fuss_narayana(m: int, n: int, k: int) -> Fraction:
    """(1/(n+1)) C(n+1, k) C((n+1) m, n-k)."""
    _check_index(n, k)
    return binomial(n + 1, k) * binomial((n + 1) * m, n - k) / (n + 1)


def fibonacci(n: int) -> int:
    """F(0) = 0, F(1) = F(2) = 1."""
    a, b = 0, 1
    for _ in range(n):
        a, b = b, a + b
    return a


def family_spec(p: FamilyParam) -> RiordanSpec:
    r = p.value
    name = str(p)
    if p.family is Family.ONE_PLUS_RX:
        return RiordanSpec.parse(f"poly:1,{r}", "x", name)
    if p.family is Family.SECOND_FAMILY:
        return RiordanSpec.parse(f"poly:1,{1 - r}*pow:1,-1", "poly:0,-1", name)
    if p.family is Family.POWER_APPELL:
        return RiordanSpec.parse(f"pow:-1,{-r}", "x", name)
    if p.family is Family.PASCAL_LIKE:
        return RiordanSpec.parse("pow:1,-1", f"poly:0,-1,{-r}*pow:1,-1", name)
    if p.family is Family.POWER_LAGRANGE:
        return RiordanSpec.parse(f"pow:-1,{-r}", "x*pow:-1,-1", name)
    raise UnknownFamily(f"unknown family {p.family!r}")


def family_term(p: FamilyParam, n: int, k: int) -> Fraction:
    """Closed form of entry (n, k) of the inversion of ``family_spec(p)``."""
    _check_index(n, k)
    r = p.value
    prefactor = binomial(n + 1, k) / (n + 1)
    if p.family is Family.ONE_PLUS_RX:
        return (-1) ** k * prefactor * binomial(2 * n - k, n - k) * (-r) ** (n - k)
    if p.family is Family.SECOND_FAMILY:
        return prefactor * second_family_factor_term(r, n, k)
    if p.family is Family.POWER_APPELL:
        return (-1) ** n * fuss_narayana(int(r), n, k)
    if p.family is Family.PASCAL_LIKE:
        return prefactor * sum(
            (binomial(k, j) * r**j * binomial(n - k + 1, n - k - j) for j in range(k + 1)),
            Fraction(0),
        )
    if p.family is Family.POWER_LAGRANGE:
        m = int(r)
        return (-1) ** n * prefactor * binomial(m * (n + 1) - k, n - k)
    raise UnknownFamily(f"unknown family {p.family!r}")


def family_triangle(p: FamilyParam, order: int) -> Triangle:
    return Triangle.from_function(order, lambda n, k: family_term(p, n, k))


def second_family_factor_term(r: Fraction | int, n: int, k: int) -> Fraction:
    """Entry (n, k) of ((Rev(x g))', Rev(x g)) for g = (1 - (r-1) x)/(1 + x)."""
    r = Fraction(r)
    return sum(
        (
            binomial(n + 1, j) * binomial(2 * n - k - j, n - k - j) * (r - 1) ** (n - k - j)
            for j in range(n - k + 1)
        ),
        Fraction(0),
    )


def second_family_row_sums(r: Fraction | int, order: int) -> SequenceView:
    """Row sums of the second-family inversion: sum over k of ballot(n, k) r^k."""
    r = Fraction(r)
    terms = [sum((ballot(n, k) * r**k for k in range(n + 1)), Fraction(0)) for n in range(order + 1)]
    return SequenceView(tuple(terms), Provenance.ROW_SUMS)


def pascal_inverse_binomial_term(r: Fraction | int, n: int, k: int) -> Fraction:
    """(1/(k+1)) C(n,k) C(k+1, n-k+1) r^(n-k)."""
    _check_index(n, k)
    return binomial(n, k) * binomial(k + 1, n - k + 1) * Fraction(r) ** (n - k) / (k + 1)


def pascal_inverse_binomial(r: Fraction | int, order: int) -> Triangle:
    """B^-1 times the Pascal-like inversion, from its closed form."""
    return Triangle.from_function(order, lambda n, k: pascal_inverse_binomial_term(r, n, k))


def pascal_second_inverse_binomial_row_sums(r: Fraction | int, order: int) -> SequenceView:
    """Row sums of B^-2 times the Pascal-like inversion: C_(n/2) r^(n/2) for even n, else 0."""
    r = Fraction(r)
    terms = [
        Fraction(0) if n % 2 else catalan(n // 2) * r ** (n // 2)
        for n in range(order + 1)
    ]
    return SequenceView(tuple(terms), Provenance.ROW_SUMS)


def pascal_inverse_binomial_check(r: Fraction | int, order: int) -> bool:
    """Both inverse binomial transforms of the Pascal-like inversion against their closed forms."""
    p = FamilyParam(family=Family.PASCAL_LIKE, param=Fraction(r))
    inversion = bang_riordan(family_spec(p), order)
    if binomial_power(inversion, -1) != pascal_inverse_binomial(r, order):
        return False
    second = binomial_power(inversion, -2).row_sums()
    return second.terms == pascal_second_inverse_binomial_row_sums(r, order).terms


def pascal_row_sums_bessel(r: Fraction | int, order: int) -> SequenceView:
    """n! [x^n] e^(2x) I_1(2 sqrt(r) x)/(sqrt(r) x), with the Bessel part expanded in r."""
    r = Fraction(r)
    bessel = XSeries(
        [
            Fraction(0) if n % 2 else r ** (n // 2) / (factorial(n // 2) * factorial(n // 2 + 1))
            for n in range(order + 1)
        ]
    )
    two_x = XSeries.from_prefix([0, 2], order)
    egf = exp_log(two_x, "exp") * bessel
    return SequenceView(
        tuple(egf[n] * factorial(n) for n in range(order + 1)), Provenance.ROW_SUMS
    )


def pascal_row_sums_binomial(
    r: Fraction | int, order: int, include_r_power: bool = True
) -> SequenceView:
    """
    sum over k of C(n, 2k) 2^(n-2k) C_k r^k.

    ``include_r_power=False`` drops r^k, which only agrees with the inversion at r = 1.
    """
    r = Fraction(r)
    terms = []
    for n in range(order + 1):
        total = Fraction(0)
        for k in range(n // 2 + 1):
            weight = r**k if include_r_power else 1
            total += binomial(n, 2 * k) * 2 ** (n - 2 * k) * catalan(k) * weight
        terms.append(total)
    return SequenceView(tuple(terms), Provenance.ROW_SUMS)


def pascal_row_sums_catalan_fibonacci(order: int) -> SequenceView:
    """sum over k of C_k C_(n-k) F(k+1) F(n-k+1); the r = 5 row sums."""
    terms = [
        Fraction(
            sum(
                catalan(k) * catalan(n - k) * fibonacci(k + 1) * fibonacci(n - k + 1)
                for k in range(n + 1)
            )
        )
        for n in range(order + 1)
    ]
    return SequenceView(tuple(terms), Provenance.ROW_SUMS)


def family_row_sum_egf_check(r: Fraction | int, order: int) -> bool:
    """Row sums of the Pascal-like inversion against the Bessel egf."""
    p = FamilyParam(family=Family.PASCAL_LIKE, param=Fraction(r))
    pipeline = bang_riordan(family_spec(p), order).row_sums()
    return pipeline.terms == pascal_row_sums_bessel(r, order).terms


def power_lagrange_identity(m: int, n: int) -> bool:
    """(-1)^n (1/(n+1)) C(m(n+1), n) == [x^(n+1)] Rev(x/(1-x)^m)."""
    reverted = revert(parse_series(f"x*pow:-1,{-m}")(n + 1))
    return (-1) ** n * binomial(m * (n + 1), n) / (n + 1) == reverted[n + 1]


def second_family_factor_row_sums(r: Fraction | int, order: int) -> SequenceView:
    """Row sums of ((Rev(x g))', Rev(x g)) for the second family; A002002 at r = 2."""
    p = FamilyParam(family=Family.SECOND_FAMILY, param=Fraction(r))
    return to_matrix(derivative_factor(family_spec(p)), order).row_sums()
