"""
Truncated power series in x over a coefficient ring.

An ``XSeries`` knows its coefficients for x^0..x^order and nothing beyond. Binary
operations on series of orders N1 and N2 give a result of order min(N1, N2); the
only operations that change the order are ``mul_x``/``integrate`` (up by one) and
``div_x``/``differentiate`` (down by one).

A ``SeriesSupplier`` is the lazy form of a fixed series: asked for an order it
returns the prefix, memoizing the longest prefix seen so far.
"""

import logging
import threading
from fractions import Fraction
from typing import Any, Callable, Iterable, Literal, Sequence

from riordan_inversion.core.errors import (
    BadConstantTerm,
    CompositionNeedsZeroConstant,
    NonUnitConstantTerm,
    NotInvertible,
    ReversionNeedsUnitLinearTerm,
)
from riordan_inversion.core.numbers import factorial, to_rational
from riordan_inversion.core.rings import QQ, QQ_Y, PolyInY, Ring

logger = logging.getLogger(__name__)


def _common_ring(a: Ring, b: Ring) -> Ring:
    if a is b:
        return a
    # QQ embeds in QQ[y]
    return QQ_Y


class XSeries:
    __slots__ = ("_coeffs", "_ring")

    def __init__(self, coeffs: Sequence[Any], ring: Ring = QQ):
        if len(coeffs) == 0:
            raise ValueError("a truncated series needs at least its constant term")
        self._ring = ring
        self._coeffs = tuple(ring.coerce_all(coeffs))

    # construction

    @classmethod
    def zero(cls, order: int, ring: Ring = QQ) -> "XSeries":
        return cls([ring.zero] * (order + 1), ring)

    @classmethod
    def constant(cls, value: Any, order: int, ring: Ring = QQ) -> "XSeries":
        return cls([ring.coerce(value)] + [ring.zero] * order, ring)

    @classmethod
    def one(cls, order: int, ring: Ring = QQ) -> "XSeries":
        return cls.constant(ring.one, order, ring)

    @classmethod
    def x(cls, order: int, ring: Ring = QQ) -> "XSeries":
        coeffs = [ring.zero] * (order + 1)
        if order >= 1:
            coeffs[1] = ring.one
        return cls(coeffs, ring)

    @classmethod
    def from_prefix(cls, coeffs: Sequence[Any], order: int, ring: Ring = QQ) -> "XSeries":
        """Series whose known coefficients are ``coeffs`` padded with zeros to ``order``."""
        values = list(coeffs[: order + 1])
        values += [ring.zero] * (order + 1 - len(values))
        return cls(values, ring)

    # accessors

    @property
    def order(self) -> int:
        return len(self._coeffs) - 1

    @property
    def ring(self) -> Ring:
        return self._ring

    @property
    def coeffs(self) -> tuple[Any, ...]:
        return self._coeffs

    def __getitem__(self, n: int) -> Any:
        if n < 0 or n > self.order:
            raise IndexError(f"coefficient x^{n} is outside the known prefix (order {self.order})")
        return self._coeffs[n]

    def __len__(self) -> int:
        return len(self._coeffs)

    def __iter__(self):
        return iter(self._coeffs)

    def truncate(self, order: int) -> "XSeries":
        if order > self.order:
            raise ValueError(f"cannot extend a series of order {self.order} to order {order}")
        if order == self.order:
            return self
        return XSeries(self._coeffs[: order + 1], self._ring)

    def change_ring(self, ring: Ring) -> "XSeries":
        if ring is self._ring:
            return self
        return XSeries(self._coeffs, ring)

    def map(self, fn: Callable[[Any], Any], ring: Ring | None = None) -> "XSeries":
        return XSeries([fn(c) for c in self._coeffs], ring or self._ring)

    def mul_x(self) -> "XSeries":
        return XSeries((self._ring.zero,) + self._coeffs, self._ring)

    def div_x(self) -> "XSeries":
        if self._coeffs[0] != 0:
            raise ValueError("series with a non-zero constant term is not divisible by x")
        if self.order == 0:
            raise ValueError("x / x needs at least the linear coefficient")
        return XSeries(self._coeffs[1:], self._ring)

    # arithmetic

    def _coerce_other(self, other: Any) -> "XSeries | None":
        if isinstance(other, XSeries):
            return other
        if isinstance(other, (int, Fraction, PolyInY)) and not isinstance(other, bool):
            ring = QQ_Y if isinstance(other, PolyInY) else self._ring
            return XSeries.constant(other, self.order, ring)
        return None

    def __add__(self, other: Any) -> "XSeries":
        rhs = self._coerce_other(other)
        if rhs is None:
            return NotImplemented
        return arith(self, rhs, "add")

    __radd__ = __add__

    def __sub__(self, other: Any) -> "XSeries":
        rhs = self._coerce_other(other)
        if rhs is None:
            return NotImplemented
        return arith(self, rhs, "sub")

    def __rsub__(self, other: Any) -> "XSeries":
        lhs = self._coerce_other(other)
        if lhs is None:
            return NotImplemented
        return arith(lhs, self, "sub")

    def __neg__(self) -> "XSeries":
        return XSeries([-c for c in self._coeffs], self._ring)

    def __mul__(self, other: Any) -> "XSeries":
        if isinstance(other, (int, Fraction, PolyInY)) and not isinstance(other, bool):
            ring = QQ_Y if isinstance(other, PolyInY) else self._ring
            return XSeries([c * other for c in self._coeffs], ring)
        if not isinstance(other, XSeries):
            return NotImplemented
        return arith(self, other, "mul")

    __rmul__ = __mul__

    def __truediv__(self, other: Any) -> "XSeries":
        if isinstance(other, XSeries):
            return self * reciprocal(other)
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return XSeries([c / other for c in self._coeffs], self._ring)
        return NotImplemented

    def __rtruediv__(self, other: Any) -> "XSeries":
        lhs = self._coerce_other(other)
        if lhs is None:
            return NotImplemented
        return lhs * reciprocal(self)

    def __pow__(self, exponent: int) -> "XSeries":
        if exponent < 0:
            return reciprocal(self) ** (-exponent)
        result = XSeries.one(self.order, self._ring)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, XSeries):
            return NotImplemented
        return self.order == other.order and all(
            a == b for a, b in zip(self._coeffs, other._coeffs)
        )

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __repr__(self) -> str:
        return f"XSeries({[str(c) for c in self._coeffs]}, ring={self._ring!r})"


def arith(a: XSeries, b: XSeries, which: Literal["add", "sub", "mul"]) -> XSeries:
    """Coefficientwise sum/difference or Cauchy product, truncated to the smaller order."""
    ring = _common_ring(a.ring, b.ring)
    order = min(a.order, b.order)
    left, right = a.coeffs, b.coeffs
    if which == "add":
        return XSeries([left[i] + right[i] for i in range(order + 1)], ring)
    if which == "sub":
        return XSeries([left[i] - right[i] for i in range(order + 1)], ring)
    if which == "mul":
        product = [ring.zero] * (order + 1)
        for i in range(order + 1):
            ai = left[i]
            if not ai:
                continue
            for j in range(order + 1 - i):
                bj = right[j]
                if bj:
                    product[i + j] = product[i + j] + ai * bj
        return XSeries(product, ring)
    raise ValueError(f"unknown series operation {which!r}")


def reciprocal(a: XSeries) -> XSeries:
    ring = a.ring
    try:
        inverse0 = ring.inverse(a[0])
    except NotInvertible as exc:
        raise NonUnitConstantTerm(
            f"constant term {a[0]} is not a unit of {ring!r}"
        ) from exc
    coeffs = a.coeffs
    result = [inverse0]
    for n in range(1, a.order + 1):
        total = ring.zero
        for i in range(1, n + 1):
            if coeffs[i]:
                total = total + coeffs[i] * result[n - i]
        result.append(-(inverse0 * total))
    return XSeries(result, ring)


def compose(a: XSeries, b: XSeries) -> XSeries:
    """a(b(x)) by Horner evaluation; needs b(0) == 0."""
    if b[0] != 0:
        raise CompositionNeedsZeroConstant(f"inner series has constant term {b[0]}")
    order = min(a.order, b.order)
    ring = _common_ring(a.ring, b.ring)
    inner = b.truncate(order).change_ring(ring)
    result = XSeries.constant(a[order], order, ring)
    for i in range(order - 1, -1, -1):
        result = result * inner
        result = XSeries((result[0] + a[i],) + result.coeffs[1:], ring)
    return result


def revert(a: XSeries) -> XSeries:
    """
    Compositional inverse of a series with a0 == 0 and a unit a1.

    Solves [x^n] a(b(x)) == 0 for b_n one order at a time. The x^n coefficient
    of b^j for j >= 2 only involves b_1..b_(n-1), so a table of powers of the
    partial inverse is enough to read off each new coefficient.
    """
    ring = a.ring
    if a.order < 1 or a[0] != 0 or not ring.is_unit(a[1]):
        raise ReversionNeedsUnitLinearTerm(
            "reversion needs a zero constant term and an invertible linear term"
        )
    order = a.order
    inverse1 = ring.inverse(a[1])
    b = [ring.zero] * (order + 1)
    b[1] = inverse1
    # powers[j][m] = [x^m] b^j
    powers = [[ring.zero] * (order + 1) for _ in range(order + 1)]
    powers[1][1] = inverse1
    for n in range(2, order + 1):
        total = ring.zero
        for j in range(2, n + 1):
            previous = powers[j - 1]
            acc = ring.zero
            for i in range(1, n - j + 2):
                if b[i] and previous[n - i]:
                    acc = acc + b[i] * previous[n - i]
            powers[j][n] = acc
            if a[j] and acc:
                total = total + a[j] * acc
        b[n] = -(inverse1 * total)
        powers[1][n] = b[n]
    logger.debug("Reverted series of order %d over %r", order, ring)
    return XSeries(b, ring)


def differentiate(a: XSeries) -> XSeries:
    if a.order == 0:
        raise ValueError("the derivative of an order-0 prefix is unknown")
    return XSeries([a[i] * i for i in range(1, a.order + 1)], a.ring)


def integrate(a: XSeries) -> XSeries:
    return XSeries([a.ring.zero] + [a[i] / (i + 1) for i in range(a.order + 1)], a.ring)


def exp_log(a: XSeries, which: Literal["exp", "log"]) -> XSeries:
    """Series exp (a0 == 0) or log (a0 == 1) from the differential-equation recurrences."""
    ring = a.ring
    order = a.order
    if which == "exp":
        if a[0] != 0:
            raise BadConstantTerm(f"exp needs a zero constant term, got {a[0]}")
        result = [ring.one]
        for n in range(1, order + 1):
            total = ring.zero
            for k in range(1, n + 1):
                if a[k]:
                    total = total + a[k] * result[n - k] * k
            result.append(total / n)
        return XSeries(result, ring)
    if which == "log":
        if a[0] != 1:
            raise BadConstantTerm(f"log needs constant term 1, got {a[0]}")
        result = [ring.zero]
        for n in range(1, order + 1):
            total = a[n] * n
            for k in range(1, n):
                if result[k] and a[n - k]:
                    total = total - result[k] * a[n - k] * k
            result.append(total / n)
        return XSeries(result, ring)
    raise ValueError(f"unknown transcendental {which!r}")


def power(a: XSeries, exponent: int | Fraction | str) -> XSeries:
    """a**m for rational m; non-integer powers need a0 == 1."""
    exponent = to_rational(exponent)
    if exponent.denominator == 1:
        return a ** int(exponent)
    return exp_log(exp_log(a, "log") * exponent, "exp")


def borel(a: XSeries) -> XSeries:
    """ogf carrier to egf carrier: coefficient n divided by n!."""
    return XSeries([a[n] / factorial(n) for n in range(a.order + 1)], a.ring)


def inv_borel(a: XSeries) -> XSeries:
    return XSeries([a[n] * factorial(n) for n in range(a.order + 1)], a.ring)


def lagrange_coefficient(H: XSeries, f: XSeries, n: int) -> Any:
    """[x^n] H(Rev f) computed as (1/n) [x^(n-1)] H'(x) (x/f)^n."""
    if n < 1:
        raise ValueError("Lagrange inversion is stated for n >= 1")
    if f.order < 1 or f[0] != 0 or not f.ring.is_unit(f[1]):
        raise ReversionNeedsUnitLinearTerm("f must have a zero constant term and a unit linear term")
    if f.order < n or H.order < n:
        raise ValueError(f"series prefixes must reach x^{n}")
    phi = reciprocal(f.div_x().truncate(n - 1))
    integrand = differentiate(H.truncate(n)) * phi ** n
    return integrand[n - 1] / n


Generator = Callable[[int], XSeries]


class SeriesSupplier:
    """
    Lazy, memoized representation of a fixed power series.

    ``supplier(order)`` returns the prefix through x^order. The longest prefix
    computed so far is cached behind a lock, so suppliers can be shared between
    threads.
    """

    def __init__(self, generate: Generator, name: str = "", ring: Ring = QQ):
        self._generate = generate
        self.name = name or "series"
        self.ring = ring
        self._cache: XSeries | None = None
        self._lock = threading.Lock()

    def __call__(self, order: int) -> XSeries:
        if order < 0:
            raise ValueError("series order must be non-negative")
        with self._lock:
            cached = self._cache
        if cached is not None and cached.order >= order:
            return cached.truncate(order)
        series = self._generate(order)
        if series.order < order:
            raise ValueError(
                f"supplier {self.name} produced order {series.order} when asked for {order}"
            )
        series = series.truncate(order)
        with self._lock:
            if self._cache is None or self._cache.order < order:
                self._cache = series
                logger.debug("Supplier %s cached through x^%d", self.name, order)
        return series

    def __repr__(self) -> str:
        return f"SeriesSupplier({self.name!r})"

    # constructors

    @classmethod
    def from_coefficients(
        cls, coeffs: Iterable[Any], name: str = "", ring: Ring = QQ
    ) -> "SeriesSupplier":
        """Polynomial supplier: the given coefficients followed by zeros."""
        values = ring.coerce_all(list(coeffs)) or [ring.zero]
        return cls(
            lambda order: XSeries.from_prefix(values, order, ring),
            name or ",".join(str(v) for v in values),
            ring,
        )

    polynomial = from_coefficients

    @classmethod
    def from_term(
        cls, term: Callable[[int], Any], name: str, ring: Ring = QQ
    ) -> "SeriesSupplier":
        return cls(lambda order: XSeries([term(n) for n in range(order + 1)], ring), name, ring)

    @classmethod
    def constant(cls, value: Any, ring: Ring = QQ) -> "SeriesSupplier":
        return cls.from_coefficients([value], str(value), ring)

    @classmethod
    def x(cls, ring: Ring = QQ) -> "SeriesSupplier":
        return cls.from_coefficients([0, 1], "x", ring)

    # derived suppliers

    def map(self, fn: Callable[[XSeries], XSeries], name: str = "", ring: Ring | None = None) -> "SeriesSupplier":
        """Apply an order-preserving series operation lazily."""
        return SeriesSupplier(lambda order: fn(self(order)), name or self.name, ring or self.ring)

    def lift(self, ring: Ring = QQ_Y) -> "SeriesSupplier":
        return self.map(lambda s: s.change_ring(ring), self.name, ring)

    def reciprocal(self) -> "SeriesSupplier":
        return self.map(reciprocal, f"1/({self.name})")

    def revert(self) -> "SeriesSupplier":
        return self.map(revert, f"Rev({self.name})")

    def compose(self, inner: "SeriesSupplier") -> "SeriesSupplier":
        return SeriesSupplier(
            lambda order: compose(self(order), inner(order)),
            f"{self.name}∘{inner.name}",
            _common_ring(self.ring, inner.ring),
        )

    def derivative(self) -> "SeriesSupplier":
        return SeriesSupplier(
            lambda order: differentiate(self(order + 1)), f"({self.name})'", self.ring
        )

    def integral(self) -> "SeriesSupplier":
        return SeriesSupplier(
            lambda order: integrate(self(max(order - 1, 0))).truncate(order),
            f"∫({self.name})",
            self.ring,
        )

    def mul_x(self) -> "SeriesSupplier":
        return SeriesSupplier(
            lambda order: self(max(order - 1, 0)).mul_x().truncate(order),
            f"x*({self.name})",
            self.ring,
        )

    def div_x(self) -> "SeriesSupplier":
        return SeriesSupplier(lambda order: self(order + 1).div_x(), f"({self.name})/x", self.ring)

    def power(self, exponent: int | Fraction) -> "SeriesSupplier":
        return self.map(lambda s: power(s, exponent), f"({self.name})^{exponent}")

    def _binary(self, other: Any, op: Callable[[XSeries, Any], XSeries], symbol: str) -> "SeriesSupplier":
        if isinstance(other, SeriesSupplier):
            return SeriesSupplier(
                lambda order: op(self(order), other(order)),
                f"({self.name}){symbol}({other.name})",
                _common_ring(self.ring, other.ring),
            )
        ring = QQ_Y if isinstance(other, PolyInY) else self.ring
        return SeriesSupplier(lambda order: op(self(order), other), f"({self.name}){symbol}{other}", ring)

    def __add__(self, other: Any) -> "SeriesSupplier":
        return self._binary(other, lambda a, b: a + b, "+")

    def __sub__(self, other: Any) -> "SeriesSupplier":
        return self._binary(other, lambda a, b: a - b, "-")

    def __rsub__(self, other: Any) -> "SeriesSupplier":
        return self._binary(other, lambda a, b: b - a, "-")

    def __mul__(self, other: Any) -> "SeriesSupplier":
        return self._binary(other, lambda a, b: a * b, "*")

    __radd__ = __add__
    __rmul__ = __mul__

    def __truediv__(self, other: Any) -> "SeriesSupplier":
        return self._binary(other, lambda a, b: a / b, "/")

    def __neg__(self) -> "SeriesSupplier":
        return self.map(lambda s: -s, f"-({self.name})")

    def __pow__(self, exponent: int) -> "SeriesSupplier":
        return self.map(lambda s: s ** exponent, f"({self.name})^{exponent}")
