"""Exception types shared by every evaluator in the package."""


class HerglotzError(Exception):
    """Base class for all evaluation errors raised by this package."""


class DomainError(HerglotzError):
    """Argument lies outside an operation's domain."""


class PoleError(DomainError):
    """Evaluation requested at, or too close to, a pole."""


class RangeError(DomainError):
    """Index outside the range of an exact table."""


class BudgetExceeded(HerglotzError):
    """Requested tolerance is unreachable within the precision budget caps."""


class PoleTooClose(HerglotzError):
    """Contour abscissa runs too close to a pole of the integrand."""


class TruncationUncertified(HerglotzError):
    """Contour truncation bound exceeds the requested tolerance."""
