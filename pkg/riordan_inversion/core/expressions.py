"""
Text form of the series used by the CLI, the HTTP surface and the corpus.

An expression is either a comma-separated list of rationals (a polynomial,
lowest degree first) or a product of factors joined by ``*``. Each factor is a
name with optional arguments, ``name`` or ``name:arg,arg``; a leading ``-``
negates the factor.

    x                  x
    one                1
    const:c            c
    poly:c0,c1,...     c0 + c1 x + ...
    pow:a,m[,d]        (1 + a x^d)^m for rational m
    exp[:a]            e^(a x)
    cosh               cosh x
    factorial          sum of n! x^n
    catalan            sum of C_n x^n
    besseli1           I_1(2x)/x

For example ``-pow:2,-1`` is -1/(1+2x) and ``x*pow:-1,-2`` is x/(1-x)^2.
"""

from fractions import Fraction
from typing import Callable

from riordan_inversion.core.errors import ExpressionError
from riordan_inversion.core.numbers import binomial, factorial, parse_rationals
from riordan_inversion.core.series import SeriesSupplier


def _power_term(a: Fraction, m: Fraction, d: int) -> Callable[[int], Fraction]:
    def term(n: int) -> Fraction:
        if n % d:
            return Fraction(0)
        j = n // d
        return binomial(m, j) * a**j

    return term


def _catalan(n: int) -> Fraction:
    return Fraction(factorial(2 * n), factorial(n) * factorial(n + 1))


def _factor(name: str, args: list[Fraction], text: str) -> SeriesSupplier:
    def arity(*allowed: int) -> None:
        if len(args) not in allowed:
            raise ExpressionError(f"{name!r} takes {' or '.join(map(str, allowed))} arguments in {text!r}")

    if name == "x":
        arity(0)
        return SeriesSupplier.x()
    if name == "one":
        arity(0)
        return SeriesSupplier.constant(1)
    if name == "const":
        arity(1)
        return SeriesSupplier.constant(args[0])
    if name == "poly":
        if not args:
            raise ExpressionError(f"'poly' needs coefficients in {text!r}")
        return SeriesSupplier.from_coefficients(args, text)
    if name == "pow":
        arity(2, 3)
        degree = int(args[2]) if len(args) == 3 else 1
        if len(args) == 3 and (args[2].denominator != 1 or degree < 1):
            raise ExpressionError(f"'pow' degree must be a positive integer in {text!r}")
        return SeriesSupplier.from_term(_power_term(args[0], args[1], degree), text)
    if name == "exp":
        arity(0, 1)
        rate = args[0] if args else Fraction(1)
        return SeriesSupplier.from_term(lambda n: rate**n / factorial(n), text)
    if name == "cosh":
        arity(0)
        return SeriesSupplier.from_term(
            lambda n: Fraction(0) if n % 2 else Fraction(1, factorial(n)), text
        )
    if name == "factorial":
        arity(0)
        return SeriesSupplier.from_term(lambda n: Fraction(factorial(n)), text)
    if name == "catalan":
        arity(0)
        return SeriesSupplier.from_term(_catalan, text)
    if name == "besseli1":
        arity(0)
        return SeriesSupplier.from_term(
            lambda n: Fraction(0)
            if n % 2
            else Fraction(1, factorial(n // 2) * factorial(n // 2 + 1)),
            text,
        )
    raise ExpressionError(f"unknown series {name!r} in {text!r}")


def parse_series(text: str) -> SeriesSupplier:
    """Parse expression text into a rational SeriesSupplier."""
    source = text.strip()
    if not source:
        raise ExpressionError("empty series expression")

    try:
        return SeriesSupplier.from_coefficients(parse_rationals(source), source)
    except (ValueError, ZeroDivisionError):
        pass

    result: SeriesSupplier | None = None
    for raw in source.split("*"):
        piece = raw.strip()
        negate = piece.startswith("-")
        if negate:
            piece = piece[1:].strip()
        name, _, arg_text = piece.partition(":")
        try:
            args = parse_rationals(arg_text)
        except (ValueError, ZeroDivisionError) as exc:
            raise ExpressionError(f"bad arguments {arg_text!r} in {text!r}: {exc}") from exc
        factor = _factor(name.strip().lower(), args, piece)
        if negate:
            factor = -factor
        result = factor if result is None else result * factor
    assert result is not None
    result.name = source
    return result
