"""Value containers and numerical control parameters shared by all modules."""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .errors import DomainError


class Method(str, enum.Enum):
    """Evaluation path that produced a value."""

    SERIES = "series"
    INTEGRAL = "integral"
    ASYMPTOTIC = "asymptotic"
    CLOSED_FORM = "closed_form"
    REFLECTION = "reflection"


@dataclass(frozen=True)
class EvalResult:
    """A function value with an absolute error estimate and its provenance.

    ``accuracy_loss`` is set when an alternating series lost more digits to
    cancellation than the tolerance allows; the value is still the best the
    path could produce.
    """

    value: float
    err_est: float
    method: Method
    accuracy_loss: bool = False

    def __post_init__(self):
        object.__setattr__(self, "value", float(self.value))
        object.__setattr__(self, "err_est", float(self.err_est))
        if math.isfinite(self.value) and not (self.err_est >= 0.0 and math.isfinite(self.err_est)):
            raise ValueError(f"err_est must be finite and >= 0, got {self.err_est!r}")

    def __float__(self) -> float:
        return float(self.value)

    def scaled(self, factor: float) -> "EvalResult":
        """Return the result multiplied by a constant, error scaled alike."""
        return EvalResult(self.value * factor, abs(factor) * self.err_est, self.method, self.accuracy_loss)


@dataclass(frozen=True)
class SeriesControl:
    """Truncation policy for every power series in the package.

    Summation stops once ``consecutive_small`` successive terms fall below
    ``rel_tol`` times the partial sum. The cancellation guard trips when the
    largest term times machine epsilon exceeds ``rel_tol`` times the sum.
    """

    rel_tol: float = 1e-14
    max_terms: int = 500
    consecutive_small: int = 3

    def __post_init__(self):
        if not 0.0 < self.rel_tol < 1.0:
            raise DomainError(f"rel_tol must lie in (0, 1), got {self.rel_tol}")
        if self.max_terms < 10:
            raise DomainError(f"max_terms must be >= 10, got {self.max_terms}")
        if self.consecutive_small < 1:
            raise DomainError("consecutive_small must be positive")


@dataclass(frozen=True)
class QuadratureControl:
    """Tolerances for adaptive quadrature.

    ``tail_cutoff`` bounds semi-infinite ranges when an integrand is known
    to carry an exponential damping factor; ``None`` lets the integrator map
    the infinite range instead.
    """

    abs_tol: float = 1e-13
    rel_tol: float = 1e-11
    max_subdivisions: int = 500
    tail_cutoff: float | None = None

    def __post_init__(self):
        if self.abs_tol <= 0 or self.rel_tol <= 0:
            raise DomainError("quadrature tolerances must be positive")
        if self.max_subdivisions < 8:
            raise DomainError(f"max_subdivisions must be >= 8, got {self.max_subdivisions}")


DEFAULT_SERIES = SeriesControl()
DEFAULT_QUAD = QuadratureControl()


@dataclass(frozen=True)
class Smooth:
    """Ordinary density value."""

    value: float

    def __post_init__(self):
        object.__setattr__(self, "value", float(self.value))

    def __float__(self) -> float:
        return float(self.value)


@dataclass(frozen=True)
class PointMass:
    """Dirac mass of ``weight`` at ``location``; never collapsed to a float."""

    location: float
    weight: float = 1.0


DensityValue = Smooth | PointMass
