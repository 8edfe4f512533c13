"""
Coefficient rings for truncated series.

Two rings are used: the rational field ``QQ`` (elements are ``Fraction``) and the
polynomial ring ``QQ_Y`` in the marker y (elements are ``PolyInY``). Series code
only touches elements through ordinary arithmetic operators plus the small
``Ring`` interface below, so one kernel serves both.
"""

from abc import ABC, abstractmethod
from fractions import Fraction
from typing import Any, Iterable, Sequence

from riordan_inversion.core.errors import NotInvertible
from riordan_inversion.core.numbers import format_rational, to_rational

Scalar = int | Fraction


class PolyInY:
    """Exact polynomial in y with rational coefficients, kept without trailing zeros."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[Scalar | str] = ()):
        values = [to_rational(c) for c in coeffs]
        while values and values[-1] == 0:
            values.pop()
        self._coeffs: tuple[Fraction, ...] = tuple(values)

    @classmethod
    def constant(cls, value: Scalar | str) -> "PolyInY":
        return cls((value,))

    @classmethod
    def monomial(cls, degree: int, value: Scalar = 1) -> "PolyInY":
        return cls([0] * degree + [value])

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self._coeffs

    @property
    def degree(self) -> int:
        """Degree in y; -1 for the zero polynomial."""
        return len(self._coeffs) - 1

    def coeff(self, k: int) -> Fraction:
        if 0 <= k < len(self._coeffs):
            return self._coeffs[k]
        return Fraction(0)

    def is_constant(self) -> bool:
        return len(self._coeffs) <= 1

    @property
    def constant_term(self) -> Fraction:
        return self.coeff(0)

    def evaluate(self, y: Scalar) -> Fraction:
        result = Fraction(0)
        for c in reversed(self._coeffs):
            result = result * y + c
        return result

    @staticmethod
    def _lift(other: Any) -> "PolyInY | None":
        if isinstance(other, PolyInY):
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return PolyInY((other,))
        return None

    def __add__(self, other: Any) -> "PolyInY":
        rhs = self._lift(other)
        if rhs is None:
            return NotImplemented
        size = max(len(self._coeffs), len(rhs._coeffs))
        return PolyInY(self.coeff(i) + rhs.coeff(i) for i in range(size))

    __radd__ = __add__

    def __neg__(self) -> "PolyInY":
        return PolyInY(-c for c in self._coeffs)

    def __sub__(self, other: Any) -> "PolyInY":
        rhs = self._lift(other)
        if rhs is None:
            return NotImplemented
        return self + (-rhs)

    def __rsub__(self, other: Any) -> "PolyInY":
        lhs = self._lift(other)
        if lhs is None:
            return NotImplemented
        return lhs - self

    def __mul__(self, other: Any) -> "PolyInY":
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return PolyInY(c * other for c in self._coeffs)
        if not isinstance(other, PolyInY):
            return NotImplemented
        if not self._coeffs or not other._coeffs:
            return ZERO_Y
        product = [Fraction(0)] * (len(self._coeffs) + len(other._coeffs) - 1)
        for i, a in enumerate(self._coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other._coeffs):
                product[i + j] += a * b
        return PolyInY(product)

    __rmul__ = __mul__

    def __truediv__(self, other: Any) -> "PolyInY":
        if isinstance(other, PolyInY):
            if not other.is_constant() or not other._coeffs:
                raise NotInvertible(f"cannot divide by {other}")
            other = other._coeffs[0]
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            if other == 0:
                raise ZeroDivisionError("division of a polynomial by zero")
            return PolyInY(c / other for c in self._coeffs)
        return NotImplemented

    def __pow__(self, exponent: int) -> "PolyInY":
        if exponent < 0:
            raise ValueError("negative powers of a polynomial are not polynomials")
        result, base = ONE_Y, self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __eq__(self, other: object) -> bool:
        rhs = self._lift(other)
        if rhs is None:
            return NotImplemented
        return self._coeffs == rhs._coeffs

    def __hash__(self) -> int:
        if len(self._coeffs) <= 1:
            return hash(self.constant_term)
        return hash(self._coeffs)

    def __repr__(self) -> str:
        return f"PolyInY({[format_rational(c) for c in self._coeffs]})"

    def __str__(self) -> str:
        if not self._coeffs:
            return "0"
        terms: list[str] = []
        for k in range(len(self._coeffs) - 1, -1, -1):
            c = self._coeffs[k]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            magnitude = abs(c)
            if k == 0:
                body = format_rational(magnitude)
            else:
                power = "y" if k == 1 else f"y^{k}"
                body = power if magnitude == 1 else f"{format_rational(magnitude)}*{power}"
            terms.append(f"{sign}{body}")
        text = "".join(terms)
        return text[1:] if text.startswith("+") else text


ZERO_Y = PolyInY()
ONE_Y = PolyInY((1,))
Y = PolyInY((0, 1))


class Ring(ABC):
    """Minimal interface the series kernel needs from a coefficient ring."""

    name: str

    @property
    @abstractmethod
    def zero(self) -> Any: ...

    @property
    @abstractmethod
    def one(self) -> Any: ...

    @abstractmethod
    def coerce(self, value: Any) -> Any: ...

    @abstractmethod
    def is_unit(self, value: Any) -> bool: ...

    @abstractmethod
    def inverse(self, value: Any) -> Any: ...

    def coerce_all(self, values: Sequence[Any]) -> list[Any]:
        return [self.coerce(v) for v in values]

    def __repr__(self) -> str:
        return self.name


class RationalField(Ring):
    name = "QQ"

    @property
    def zero(self) -> Fraction:
        return Fraction(0)

    @property
    def one(self) -> Fraction:
        return Fraction(1)

    def coerce(self, value: Any) -> Fraction:
        if isinstance(value, PolyInY):
            if not value.is_constant():
                raise TypeError(f"{value} is not a rational constant")
            return value.constant_term
        return to_rational(value)

    def is_unit(self, value: Fraction) -> bool:
        return value != 0

    def inverse(self, value: Fraction) -> Fraction:
        if value == 0:
            raise NotInvertible("0 has no inverse")
        return 1 / Fraction(value)


class PolynomialRing(Ring):
    """QQ[y]; only the non-zero constants are units."""

    name = "QQ[y]"

    @property
    def zero(self) -> PolyInY:
        return ZERO_Y

    @property
    def one(self) -> PolyInY:
        return ONE_Y

    def coerce(self, value: Any) -> PolyInY:
        if isinstance(value, PolyInY):
            return value
        return PolyInY.constant(value)

    def is_unit(self, value: PolyInY) -> bool:
        return value.is_constant() and bool(value)

    def inverse(self, value: PolyInY) -> PolyInY:
        if not self.is_unit(value):
            raise NotInvertible(f"{value} is not a unit of QQ[y]")
        return PolyInY.constant(1 / value.constant_term)


QQ = RationalField()
QQ_Y = PolynomialRing()
