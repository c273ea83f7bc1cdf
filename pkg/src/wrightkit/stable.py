"""Levy stable densities in Feller's (alpha, theta) parameterization.

Characteristic function: exp(-|kappa|^alpha exp(i sign(kappa) theta pi/2)),
with (alpha, theta) inside the diamond |theta| <= min(alpha, 2 - alpha).

Evaluation order: closed forms, the M-Wright bridge for extremal theta, the
convergent Feller series (guarded against cancellation), the large-x
expansion for 1 < alpha < 2, and finally numerical inversion of the
characteristic function.
"""
from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

from scipy import integrate as spi

from .errors import ConvergenceError, DomainError
from .results import DensityValue, EvalResult, Method, PointMass, SeriesControl, Smooth
from .special import EPS, sinpi, sum_series
from .wright import m_closed_form, wright_m

_TOL = 1e-13


@dataclass(frozen=True)
class StableParams:
    alpha: float
    theta: float

    def __post_init__(self):
        a, th = float(self.alpha), float(self.theta)
        if not (0.0 < a <= 2.0):
            raise DomainError(f"stability index must satisfy 0 < alpha <= 2, got {a}")
        bound = min(a, 2.0 - a)
        if abs(th) > bound + 1e-12:
            which = "alpha" if a <= 1 else "2 - alpha"
            raise DomainError(f"skewness out of the diamond: |theta| = {abs(th)} > {which} = {bound}")

    @property
    def bound(self) -> float:
        return min(self.alpha, 2.0 - self.alpha)

    def is_extremal(self) -> bool:
        return self.alpha not in (1.0, 2.0) and abs(abs(self.theta) - self.bound) < 1e-12

    def is_symmetric(self) -> bool:
        return self.theta == 0.0

    def is_singular(self) -> bool:
        return self.alpha == 1.0 and abs(abs(self.theta) - 1.0) < 1e-12

    def mirrored(self) -> "StableParams":
        return StableParams(self.alpha, -self.theta)


def validate(alpha: float, theta: float) -> StableParams:
    """Check (alpha, theta) against the Feller-Takayasu diamond."""
    return StableParams(alpha, theta)


def stable_cf(params: StableParams, kappa: float) -> tuple[float, float]:
    """Real and imaginary parts of the characteristic function at kappa."""
    if kappa == 0:
        return 1.0, 0.0
    k = abs(kappa) ** params.alpha
    ph = math.copysign(1.0, kappa) * params.theta * math.pi / 2.0
    mag = math.exp(-k * math.cos(ph))
    return mag * math.cos(-k * math.sin(ph)), mag * math.sin(-k * math.sin(ph))


# --------------------------------------------------------------------------
# closed forms and the Wright bridge


def _closed_form(p: StableParams, x: float) -> DensityValue | None:
    if p.is_singular():
        return PointMass(-p.theta, 1.0)
    if p.alpha == 2.0:
        return Smooth(math.exp(-x * x / 4.0) / (2.0 * math.sqrt(math.pi)))
    if p.alpha == 1.0:
        c = math.cos(p.theta * math.pi / 2.0)
        s = math.sin(p.theta * math.pi / 2.0)
        return Smooth(c / (math.pi * ((x + s) ** 2 + c * c)))
    if p.alpha == 0.5 and abs(p.theta) == 0.5:
        u = x if p.theta < 0 else -x
        if u <= 0:
            return Smooth(0.0)
        return Smooth(u ** -1.5 * math.exp(-1.0 / (4.0 * u)) / (2.0 * math.sqrt(math.pi)))
    return None


def extremal_via_wright(alpha: float, x: float) -> EvalResult:
    """Extremal stable density through the M-Wright function.

    0 < alpha < 1: L_alpha^{-alpha}(x) = alpha x^-(alpha+1) M_alpha(x^-alpha), zero for x <= 0.
    1 < alpha <= 2: L_alpha^{alpha-2}(x) = M_{1/alpha}(x)/alpha on the whole line.
    """
    alpha = float(alpha)
    x = float(x)
    if 0.0 < alpha < 1.0:
        if x <= 0.0:
            return EvalResult(0.0, 0.0, Method.CLOSED_FORM)
        return wright_m(alpha, x ** -alpha).scaled(alpha * x ** -(alpha + 1.0))
    if 1.0 < alpha <= 2.0:
        nu = 1.0 / alpha
        if x < 0.0:
            cf = m_closed_form(nu, x)
            if cf is not None:
                return cf.scaled(1.0 / alpha)
        return wright_m(nu, x).scaled(1.0 / alpha)
    if alpha == 1.0:
        raise DomainError("alpha = 1 gives the point mass at x = 1; use stable_pdf")
    raise DomainError(f"alpha must lie in (0, 1) or (1, 2], got {alpha}")


# --------------------------------------------------------------------------
# Feller series and characteristic-function inversion


def feller_series(p: StableParams, x: float, ctl: SeriesControl | None = None) -> EvalResult:
    """Convergent expansion for x > 0: powers of x^-alpha (alpha < 1) or of x (alpha > 1)."""
    a, th = p.alpha, p.theta
    if not x > 0:
        raise DomainError("the Feller series is stated for x > 0")
    if a == 1.0:
        raise DomainError("the series degenerates at alpha = 1")
    ctl = ctl or SeriesControl(max_terms=2000)
    if a < 1.0:
        w, step, shift = x ** -a, a, (th - a) / 2.0
    else:
        w, step, shift = x, 1.0 / a, (th - a) / (2.0 * a)
    lw = math.log(w)

    def term(n):
        if n == 0:
            return 0.0
        s = sinpi(n * shift)
        if s == 0.0:
            return 0.0
        lg = math.lgamma(1.0 + n * step) - math.lgamma(n + 1.0) + n * lw
        if lg > 700:
            return math.inf
        return (-1.0) ** n * s * math.exp(lg)

    res = sum_series(term, ctl, start=0)
    if not math.isfinite(res.value):
        return EvalResult(0.0, math.inf, Method.SERIES, True)
    return EvalResult(res.value / (math.pi * x), res.err_est / (math.pi * x), Method.SERIES, res.accuracy_loss)


def tail_start(alpha: float) -> float:
    """x beyond which the large-x expansion is used for 1 < alpha < 2.

    The expansion misses corrections of order exp(-c x^(alpha/(alpha-1)))
    with c of order 0.1; requiring x^(alpha/(alpha-1)) >= 400 keeps them
    below double precision.
    """
    return max(10.0, 400.0 ** ((alpha - 1.0) / alpha))


def feller_tail(p: StableParams, x: float) -> EvalResult | None:
    """Large-x expansion in powers of x^-alpha for 1 < alpha < 2 (asymptotic, not convergent).

    Returns ``None`` when x is below :func:`tail_start` or the terms have
    not died out after 60 terms.
    """
    a, th = p.alpha, p.theta
    if not (1.0 < a < 2.0) or x < tail_start(a):
        return None
    lw = -a * math.log(x)
    total, comp, last = 0.0, 0.0, math.inf
    for n in range(1, 60):
        t = (-1.0) ** n * sinpi(n * (th - a) / 2.0) * math.exp(math.lgamma(1.0 + n * a) - math.lgamma(n + 1.0) + n * lw)
        if abs(t) > last and abs(t) > 0:
            return None
        y = t - comp
        z = total + y
        comp = (z - total) - y
        total = z
        if t != 0.0:
            last = abs(t)
        if last <= 1e-17 * abs(total):
            v = total / (math.pi * x)
            return EvalResult(v, 8 * EPS * abs(v), Method.ASYMPTOTIC)
    return None


def cf_inversion(p: StableParams, x: float) -> EvalResult:
    """(1/pi) int_0^inf exp(-k^a cos(th pi/2)) cos(k x + k^a sin(th pi/2)) dk."""
    a = p.alpha
    c = math.cos(p.theta * math.pi / 2.0)
    s = math.sin(p.theta * math.pi / 2.0)
    if x == 0.0:
        v = math.gamma(1.0 + 1.0 / a) * math.cos(p.theta * math.pi / (2.0 * a)) / math.pi
        return EvalResult(v, 4 * EPS * abs(v), Method.CLOSED_FORM)
    if c <= 0.0:
        raise ConvergenceError("characteristic function does not decay; cannot invert")
    # k beyond which exp(-c k^a) < 1e-17
    kmax = (40.0 / c) ** (1.0 / a)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", spi.IntegrationWarning)
        if kmax * abs(x) < 2000:
            g = lambda k: math.exp(-c * k ** a) * math.cos(k * x + s * k ** a)
            brk = [min(kmax, 1.0)] + [min(kmax, q) for q in (5.0, 20.0)]
            v, e = spi.quad(g, 0.0, kmax, points=sorted(set(brk)), epsabs=_TOL, epsrel=1e-12, limit=2000)
        else:
            # separate cos(k x), sin(k x) weights, QUADPACK Fourier integral
            ax = abs(x)
            sg = math.copysign(1.0, x)
            gc = lambda k: math.exp(-c * k ** a) * math.cos(s * k ** a)
            gs = lambda k: math.exp(-c * k ** a) * math.sin(s * k ** a)
            v1, e1 = spi.quad(gc, 0.0, math.inf, weight="cos", wvar=ax, limlst=200)
            v2, e2 = spi.quad(gs, 0.0, math.inf, weight="sin", wvar=ax, limlst=200)
            v, e = v1 - sg * v2, e1 + e2
    v /= math.pi
    return EvalResult(v, e / math.pi + 8 * EPS * abs(v), Method.INTEGRAL)


def _smooth_value(p: StableParams, x: float, ctl: SeriesControl | None) -> EvalResult:
    # x > 0 only; negative x is handled by mirroring
    if p.is_extremal():
        # theta > 0 is the mirror image of the theta < 0 bridge
        r = extremal_via_wright(p.alpha, x if p.theta < 0 else -x)
        if not r.accuracy_loss:
            return r
    if x > 0:
        r = feller_series(p, x, ctl)
        if not r.accuracy_loss and math.isfinite(r.err_est):
            return r
        r = feller_tail(p, x)
        if r is not None:
            return r
    return cf_inversion(p, x)


def stable_density(params: StableParams, x: float, ctl: SeriesControl | None = None) -> EvalResult:
    """Smooth density value with its error estimate (no point masses)."""
    p = params
    x = float(x)
    cf = _closed_form(p, x)
    if isinstance(cf, PointMass):
        raise DomainError("alpha = 1, |theta| = 1 is a point mass")
    if cf is not None:
        return EvalResult(cf.value, 8 * EPS * abs(cf.value), Method.CLOSED_FORM)
    if x < 0.0:
        return stable_density(p.mirrored(), -x, ctl)
    if x == 0.0:
        if p.is_extremal() and p.alpha < 1.0:
            return EvalResult(0.0, 0.0, Method.CLOSED_FORM)
        return cf_inversion(p, 0.0)
    return _smooth_value(p, x, ctl)


def stable_pdf(params: StableParams, x: float, ctl: SeriesControl | None = None) -> DensityValue:
    """Density L_alpha^theta(x) as a tagged value (Smooth or PointMass)."""
    cf = _closed_form(params, float(x))
    if isinstance(cf, PointMass):
        return cf
    return Smooth(stable_density(params, x, ctl).value)


def stable_scaled(params: StableParams, x: float, t: float) -> DensityValue:
    """L_alpha^theta(x, t) = t^(-1/alpha) L_alpha^theta(x t^(-1/alpha))."""
    if not t > 0:
        raise DomainError(f"t must be positive, got {t}")
    c = t ** (-1.0 / params.alpha)
    d = stable_pdf(params, x * c)
    if isinstance(d, PointMass):
        return PointMass(d.location / c, d.weight)
    return Smooth(c * d.value)


def stable_mass(params: StableParams) -> EvalResult:
    """Total mass of the density, for checking normalization.

    [-1, 1] is integrated directly; each tail |x| > 1 is mapped to u in (0, 1]
    by x = u^(-1/alpha), which turns the algebraic tail into a bounded
    integrand.
    """
    from .transforms import integrate

    p = params
    if p.is_singular():
        return EvalResult(1.0, 0.0, Method.CLOSED_FORM)
    a = p.alpha
    f = lambda x: stable_density(p, x).value
    core = integrate(f, -1.0, 1.0, points=[0.0])
    total, err = core.value, core.err_est
    for sg in (1.0, -1.0):
        def g(u, sg=sg):
            if u <= 0.0:
                return 0.0
            return f(sg * u ** (-1.0 / a)) * u ** (-1.0 / a - 1.0) / a
        r = integrate(g, 0.0, 1.0)
        total += r.value
        err += r.err_est
    return EvalResult(total, err, Method.INTEGRAL)


def reciprocity_map(alpha: float, theta: float) -> tuple[float, float]:
    """(1/alpha, theta*) with x^-(alpha+1) L_{1/alpha}^theta(x^-alpha) = L_alpha^{theta*}(x).

    Requires 1/2 <= alpha <= 1 and |theta| <= 2 - 1/alpha; theta* = alpha(theta + 1) - 1.
    """
    if not 0.5 <= alpha <= 1.0:
        raise DomainError(f"reciprocity needs 1/2 <= alpha <= 1, got {alpha}")
    if abs(theta) > 2.0 - 1.0 / alpha + 1e-12:
        raise DomainError(f"|theta| = {abs(theta)} exceeds 2 - 1/alpha = {2.0 - 1.0 / alpha}")
    return 1.0 / alpha, alpha * (theta + 1.0) - 1.0


__all__ = [
    "StableParams", "validate", "stable_cf", "extremal_via_wright", "feller_series", "cf_inversion",
    "tail_start", "feller_tail", "stable_density", "stable_mass", "stable_pdf", "stable_scaled", "reciprocity_map",
]
