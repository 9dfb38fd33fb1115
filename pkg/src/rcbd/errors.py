"""Exception hierarchy shared by all rcbd modules."""


class RCBDError(Exception):
    """Base class for all errors raised by this package."""


class DimensionError(RCBDError, ValueError):
    """Data matrix has fewer than two blocks or two treatments, or is ragged."""


class TiesError(RCBDError, ValueError):
    """Two responses in the same block are exactly equal."""


class DomainError(RCBDError, ValueError):
    """An argument lies outside the domain of a formula."""


class DegenerateError(RCBDError, ArithmeticError):
    """A statistic or moment sits on a pole of a transformation."""


class SeriesError(RCBDError, ArithmeticError):
    """A Poisson mixture did not converge within the allowed number of terms."""


class CapacityError(RCBDError):
    """An exact enumeration would exceed its configured size limits."""


class NotAttainableError(RCBDError):
    """A target power cannot be reached within the searched block range."""


class UnknownTargetError(RCBDError, LookupError):
    """A table or figure number that has no reproduction recipe."""
