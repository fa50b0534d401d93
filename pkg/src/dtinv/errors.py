"""Exception types raised across the package."""


class DTError(Exception):
    """Base class for every error raised by dtinv."""


class ZeroConstantTerm(DTError, ZeroDivisionError):
    pass


class BadConstantTerm(DTError, ValueError):
    pass


class OutOfRange(DTError, IndexError):
    pass


class DimensionTooSmall(DTError, ValueError):
    pass


class DimensionMismatch(DTError, ValueError):
    pass


class NegativeDimension(DTError, ValueError):
    pass


class BadPunctualSeries(DTError, ValueError):
    pass


class RouteMismatch(DTError, AssertionError):
    """Two independent computations of the same quantity disagree."""


class AmbientMismatch(DTError, ValueError):
    pass


class NonUnit(DTError, ValueError):
    pass


class NonIntegerResult(DTError, ArithmeticError):
    pass


class BadEpsilon(DTError, ValueError):
    pass


class BadWindow(DTError, ValueError):
    pass


class OnWallUnsupported(DTError, ValueError):
    pass


class AboveUpperUnsupported(DTError, ValueError):
    pass


class IntegralityViolation(DTError, ArithmeticError):
    pass
