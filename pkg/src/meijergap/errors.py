"""Exception types raised by the numerical routines."""


class MeijerGapError(Exception):
    """Base class for all library errors."""


class PoleError(MeijerGapError, ValueError):
    """Argument coincides (to machine tolerance) with a pole of the function."""


class DomainError(MeijerGapError, ValueError):
    """Argument outside the mathematical domain of the operation."""


class RangeError(MeijerGapError, ValueError):
    """Argument outside the supported numerical envelope."""


class ConvergenceError(MeijerGapError, ArithmeticError):
    """An iterative or truncated process failed to reach its target accuracy."""


class AccuracyError(MeijerGapError, ArithmeticError):
    """A computed result failed an internal accuracy diagnostic."""


class SingularityError(MeijerGapError, ArithmeticError):
    """The discretized operator is numerically singular (determinant underflow)."""
