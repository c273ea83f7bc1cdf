"""Fundamental solutions of the time-fractional diffusion-wave equation.

Everything is computed in the nondimensional distance a = |x|/sqrt(D); the
diffusivity only enters at the API boundary. At t = 0 the Green functions
are distributions and are returned as :class:`PointMass` descriptors.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .errors import DomainError
from .results import EvalResult, Method, PointMass
from .special import EPS
from .transforms import ConvMode, SampledFunction, convolve
from .wright import WrightParams, wright_f, wright_m, wright_second_kind, wright_w

SQRT_PI = math.sqrt(math.pi)


class Problem(str, enum.Enum):
    CAUCHY = "cauchy"
    SIGNALLING = "signalling"


@dataclass(frozen=True)
class GreenSpec:
    """Problem kind, nu = beta/2 in (0, 1] and diffusivity D > 0."""

    problem: Problem
    nu: float
    diffusivity: float = 1.0

    def __post_init__(self):
        object.__setattr__(self, "problem", Problem(self.problem))
        if not 0.0 < self.nu <= 1.0:
            raise DomainError(f"nu must lie in (0, 1], got {self.nu}")
        if not self.diffusivity > 0:
            raise DomainError(f"diffusivity must be positive, got {self.diffusivity}")

    def with_problem(self, problem: Problem | str) -> "GreenSpec":
        return GreenSpec(Problem(problem), self.nu, self.diffusivity)

    def reduced(self, x: float) -> float:
        """Nondimensional distance a = |x|/sqrt(D)."""
        return abs(x) / math.sqrt(self.diffusivity)


@dataclass(frozen=True)
class SimilarityPoint:
    """(x, t) with the similarity variable z = x/(sqrt(D) t^nu)."""

    x: float
    t: float
    z: float

    @classmethod
    def of(cls, x: float, t: float, diffusivity: float, nu: float) -> "SimilarityPoint":
        if not t > 0:
            raise DomainError(f"t must be positive, got {t}")
        return cls(x, t, x / (math.sqrt(diffusivity) * t ** nu))

    def check(self, diffusivity: float, nu: float) -> bool:
        return self.z == self.x / (math.sqrt(diffusivity) * self.t ** nu)


def _check_eval_nu(spec: GreenSpec):
    if spec.nu >= 1.0:
        raise DomainError("nu = 1 (wave equation) Green functions are distributions; "
                          "use nu < 1 for pointwise evaluation")


def green_cauchy(spec: GreenSpec, x: float, t: float) -> EvalResult | PointMass:
    """t^-nu/(2 sqrt D) M_nu(|x|/(sqrt D t^nu)); a unit mass at x = 0 when t = 0."""
    if t == 0:
        return PointMass(0.0, 1.0)
    if not t > 0:
        raise DomainError(f"t must be >= 0, got {t}")
    _check_eval_nu(spec)
    s = t ** -spec.nu
    return wright_m(spec.nu, spec.reduced(x) * s).scaled(s / (2.0 * math.sqrt(spec.diffusivity)))


def green_signalling(spec: GreenSpec, x: float, t: float) -> EvalResult | PointMass:
    """nu x t^(-nu-1)/sqrt(D) M_nu(x/(sqrt D t^nu)) for x >= 0.

    At t = 0 the value is 0 for x > 0 and a unit mass in time at x = 0.
    """
    if x < 0:
        raise DomainError(f"signalling problem lives on x >= 0, got {x}")
    if t == 0:
        return PointMass(0.0, 1.0) if x == 0 else EvalResult(0.0, 0.0, Method.CLOSED_FORM)
    if not t > 0:
        raise DomainError(f"t must be >= 0, got {t}")
    _check_eval_nu(spec)
    a = spec.reduced(x)
    if a == 0.0:
        return EvalResult(0.0, 0.0, Method.CLOSED_FORM)
    s = t ** -spec.nu
    return wright_m(spec.nu, a * s).scaled(spec.nu * a * s / t)


def green_laplace(spec: GreenSpec, x: float, s: float) -> float:
    """Laplace transforms of the Green functions in t."""
    if not s > 0:
        raise DomainError("s must be positive")
    a = spec.reduced(x)
    decay = math.exp(-a * s ** spec.nu)
    if spec.problem is Problem.CAUCHY:
        return decay / (2.0 * math.sqrt(spec.diffusivity) * s ** (1.0 - spec.nu))
    return decay


def reciprocity(nu: float, diffusivity: float, x: float, t: float) -> tuple[float, float, float]:
    """(2 nu x G_c, t G_s, F_nu(z)), which must coincide for x, t > 0.

    F is taken from its own series while that is reliable, so the third
    entry does not simply reuse the M-Wright evaluation.
    """
    if not (x > 0 and t > 0):
        raise DomainError("reciprocity needs x > 0 and t > 0")
    if not 0 < nu < 1:
        raise DomainError("reciprocity needs 0 < nu < 1")
    spec = GreenSpec(Problem.CAUCHY, nu, diffusivity)
    lhs = 2.0 * nu * x * green_cauchy(spec, x, t).value
    mid = t * green_signalling(spec.with_problem(Problem.SIGNALLING), x, t).value
    z = SimilarityPoint.of(x, t, diffusivity, nu).z
    fs = wright_w(WrightParams(-nu, 0.0), -z)
    rhs = fs.value if not fs.accuracy_loss else wright_f(nu, z).value
    return lhs, mid, rhs


def solve_cauchy(spec: GreenSpec, f: SampledFunction, x: float, t: float) -> EvalResult:
    """u(x, t) = int G_c(x - xi, t) f(xi) dxi over the data support."""
    spec = spec.with_problem(Problem.CAUCHY)
    if not t > 0:
        raise DomainError("t must be positive")
    kernel = lambda u: green_cauchy(spec, u, t).value
    return convolve(kernel, f, x, ConvMode.SPACE)


def solve_signalling(spec: GreenSpec, g: SampledFunction, x: float, t: float) -> EvalResult:
    """u(x, t) = int_0^t G_s(x, t - tau) g(tau) dtau."""
    spec = spec.with_problem(Problem.SIGNALLING)
    if x < 0 or not t > 0:
        raise DomainError("signalling solution needs x >= 0 and t > 0")

    def kernel(tau):
        if tau <= 0:
            return 0.0
        return green_signalling(spec, x, tau).value

    return convolve(kernel, g, t, ConvMode.TIME)


@dataclass(frozen=True)
class ThreeSisters:
    phi: EvalResult
    psi: EvalResult
    chi: EvalResult


def three_sisters(a: float, t: float) -> ThreeSisters:
    """Step response, signalling kernel and Cauchy-type kernel of plain diffusion."""
    if a < 0 or not t > 0:
        raise DomainError("three sisters need a >= 0 and t > 0")
    g = math.exp(-a * a / (4.0 * t))
    phi = math.erfc(a / (2.0 * math.sqrt(t)))
    psi = a / (2.0 * SQRT_PI) * t ** -1.5 * g
    chi = g / (SQRT_PI * math.sqrt(t))
    r = lambda v: EvalResult(v, 4 * EPS * abs(v), Method.CLOSED_FORM)
    return ThreeSisters(r(phi), r(psi), r(chi))


def three_sisters_laplace(a: float, s: float) -> tuple[float, float, float]:
    """Laplace images e^{-a sqrt s}/s, e^{-a sqrt s}, e^{-a sqrt s}/sqrt s."""
    e = math.exp(-a * math.sqrt(s))
    return e / s, e, e / math.sqrt(s)


def sister_mus(nu: float) -> tuple[float, ...]:
    """Distinct values of mu in {0, 1-nu, nu, 1}, sorted."""
    out = []
    for mu in (0.0, nu, 1.0 - nu, 1.0):
        if not any(abs(mu - m) < 1e-15 for m in out):
            out.append(mu)
    return tuple(sorted(out))


def four_sisters(nu: float, x: float, t: float) -> dict[float, EvalResult]:
    """t^(mu-1) W_{-nu,mu}(-x t^-nu) for mu in {0, 1-nu, nu, 1}.

    These are the inverse Laplace transforms of s^-mu exp(-x s^nu). At
    nu = 1/2 two of the four coincide and three entries are returned.
    """
    if not 0 < nu < 1:
        raise DomainError("nu must lie in (0, 1)")
    if x < 0 or not t > 0:
        raise DomainError("four sisters need x >= 0 and t > 0")
    z = x * t ** -nu
    return {mu: wright_second_kind(nu, mu, z).scaled(t ** (mu - 1.0)) for mu in sister_mus(nu)}


__all__ = [
    "Problem", "GreenSpec", "SimilarityPoint", "green_cauchy", "green_signalling", "green_laplace",
    "reciprocity", "solve_cauchy", "solve_signalling", "ThreeSisters", "three_sisters",
    "three_sisters_laplace", "sister_mus", "four_sisters",
]
