"""Exception and warning types raised by wrightkit."""


class WrightkitError(Exception):
    """Base class for all library errors."""


class DomainError(WrightkitError, ValueError):
    """An argument lies outside the domain of the operation."""


class PoleError(DomainError):
    """Evaluation requested at a pole (e.g. Gamma at a non-positive integer)."""


class ConvergenceError(WrightkitError, ArithmeticError):
    """A series or quadrature did not reach its tolerance within budget."""


class MissingInitialDataError(WrightkitError, ValueError):
    """Initial values f^(k)(0+) required by an operator were not supplied."""


class AccuracyLossWarning(UserWarning):
    """Cancellation in an alternating sum exceeded the requested tolerance."""


class SupportTruncationWarning(UserWarning):
    """Sampled data do not cover the essential support of a kernel."""


class OscillationWarning(UserWarning):
    """An integrand oscillates faster than the quadrature can resolve."""


class InstabilityWarning(UserWarning):
    """Node doubling in a contour rule made the estimate worse."""
