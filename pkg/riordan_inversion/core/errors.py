"""Exception hierarchy shared by the series kernel, the array modules and the corpus."""

from pathlib import Path


class RiordanError(Exception):
    """Base class for every error raised by this package."""


# Series arithmetic


class SeriesError(RiordanError, ArithmeticError):
    """A series operation was asked for something its inputs cannot give."""


class NonUnitConstantTerm(SeriesError):
    """The constant term of a series is not invertible in its coefficient ring."""


class CompositionNeedsZeroConstant(SeriesError):
    """The inner series of a composition has a non-zero constant term."""


class ReversionNeedsUnitLinearTerm(SeriesError):
    """Reversion needs a0 == 0 and an invertible a1."""


class BadConstantTerm(SeriesError):
    """exp needs a0 == 0, log needs a0 == 1."""


class NotInvertible(SeriesError):
    """A ring element has no inverse."""


class NonUnitDenominator(SeriesError):
    """A continued-fraction level evaluated to a series that cannot be inverted."""


class IndexAboveDiagonal(RiordanError, IndexError):
    def __init__(self, n: int, k: int):
        super().__init__(f"entry ({n}, {k}) lies above the diagonal")
        self.n = n
        self.k = k


# Validation


class InvalidRiordanPair(RiordanError, ValueError):
    """(g, f) fails g(0) != 0, f(0) == 0, f'(0) != 0."""


class NotAppell(RiordanError, ValueError):
    pass


class NotLagrange(RiordanError, ValueError):
    pass


class NonIntegralEntry(RiordanError, ValueError):
    def __init__(self, n: int, k: int, value):
        super().__init__(f"entry ({n}, {k}) = {value} is not an integer")
        self.n = n
        self.k = k
        self.value = value


class TriangularSupportError(RiordanError, ValueError):
    """A computed bivariate series has a non-zero coefficient x^n y^k with k > n."""


class UnknownFamily(RiordanError, ValueError):
    pass


class ExpressionError(RiordanError, ValueError):
    """Series expression text could not be parsed."""


class ParseError(RiordanError, ValueError):
    """A corpus or continued-fraction file could not be loaded."""

    def __init__(
        self,
        message: str,
        path: Path | str | None = None,
        line: int | None = None,
        field: str | None = None,
    ):
        location = ""
        if path is not None:
            location = str(path)
            if line is not None:
                location += f":{line}"
            location += ": "
        if field:
            location += f"{field}: "
        super().__init__(f"{location}{message}")
        self.path = path
        self.line = line
        self.field = field


# Iteration


class NoStabilization(RiordanError, RuntimeError):
    def __init__(self, order: int, depth_cap: int):
        super().__init__(
            f"continued fraction did not stabilize through x^{order} within depth {depth_cap}"
        )
        self.order = order
        self.depth_cap = depth_cap
