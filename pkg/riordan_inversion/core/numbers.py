"""Exact rational helpers: parsing, formatting and generalized binomials."""

import math
import re
from fractions import Fraction
from typing import Iterable

Rational = Fraction

_RATIONAL_TEXT = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")


def to_rational(value: int | Fraction | str) -> Fraction:
    """
    Convert an int, a Fraction or decimal text ("p" or "p/q") to a Fraction.

    Floats and bools are rejected so that no inexact value can slip into the
    arithmetic. A zero denominator raises ZeroDivisionError.
    """
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        match = _RATIONAL_TEXT.match(value)
        if not match:
            raise ValueError(f"not an exact rational: {value!r}")
        numerator = int(match.group(1))
        denominator = int(match.group(2)) if match.group(2) is not None else 1
        if denominator == 0:
            raise ZeroDivisionError(f"zero denominator in {value!r}")
        return Fraction(numerator, denominator)
    raise TypeError(f"cannot use {type(value).__name__} as an exact rational")


def parse_rationals(text: str) -> list[Fraction]:
    """Parse a comma-separated list such as "1,-2,3/4"."""
    if not text.strip():
        return []
    return [to_rational(part) for part in text.split(",")]


def format_rational(value: Fraction | int) -> str:
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def binomial(a: Fraction | int, k: int) -> Fraction:
    """Generalized binomial a(a-1)...(a-k+1)/k!; zero for k < 0."""
    if k < 0:
        return Fraction(0)
    if isinstance(a, int) and a >= 0:
        return Fraction(math.comb(a, k))
    result = Fraction(1)
    a = Fraction(a)
    for j in range(k):
        result = result * (a - j) / (j + 1)
    return result


def factorial(n: int) -> int:
    return math.factorial(n)


def is_integral(values: Iterable[Fraction]) -> bool:
    return all(Fraction(v).denominator == 1 for v in values)
