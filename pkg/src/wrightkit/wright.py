"""Wright functions and the Mainardi auxiliary functions F and M.

``wright_w`` is the raw power series for any admissible (lambda, mu). The
M-Wright function has a dispatcher that picks, per point, a closed form, the
series, the Liemert-Kleine integral or the saddle-point approximation.
Second-kind functions W_{-nu,mu}(-x) with mu in {0, 1-nu, nu, 1} (the four
sisters at t = 1) get dedicated positive-integrand representations so that
large arguments keep full relative accuracy.
"""
from __future__ import annotations

import enum
import math
import warnings
from dataclasses import dataclass

import numpy as np
from scipy import integrate, special as sps

from .config import get_config
from .errors import DomainError
from .results import EvalResult, Method, SeriesControl
from .special import AIRY_SWITCH, EPS, airy, airy_scaled, coefficient_term, log_abs_rgamma, rgamma, sum_series

SQRT_PI = math.sqrt(math.pi)


class Kind(enum.Enum):
    FIRST = "first"
    SECOND = "second"


@dataclass(frozen=True)
class WrightParams:
    """Parameters (lambda, mu) of W_{lambda,mu}; entire for lambda > -1."""

    lam: float
    mu: float

    def __post_init__(self):
        if not self.lam > -1.0:
            raise DomainError(f"Wright function needs lambda > -1, got {self.lam}")
        if not math.isfinite(self.mu):
            raise DomainError("mu must be finite")

    def kind(self) -> Kind:
        return Kind.FIRST if self.lam >= 0 else Kind.SECOND


def _check_nu(nu: float) -> float:
    nu = float(nu)
    if not 0.0 < nu < 1.0:
        raise DomainError(f"auxiliary index nu must lie in (0, 1), got {nu}")
    return nu


def _ctl(ctl: SeriesControl | None) -> SeriesControl:
    return ctl if ctl is not None else get_config().series


def wright_w(params: WrightParams, z: float, ctl: SeriesControl | None = None) -> EvalResult:
    """W_{lambda,mu}(z) = sum z^n / (n! Gamma(lambda n + mu)) by direct summation.

    The result carries ``accuracy_loss`` when the alternating sum cancels
    beyond the tolerance; callers may then re-route. lambda = 0 is the
    exponential e^z/Gamma(mu), and for lambda = 1 a cancelling series is
    replaced by the Bessel form.
    """
    z = float(z)
    if not math.isfinite(z):
        raise DomainError("wright_w needs a finite argument")
    lam, mu = params.lam, params.mu
    if z == 0.0:
        return EvalResult(rgamma(mu), 0.0, Method.SERIES)
    if lam == 0.0:
        v = math.exp(z) * rgamma(mu) if z < 709.0 else math.inf
        return EvalResult(v, 4 * EPS * abs(v), Method.CLOSED_FORM)
    if abs(z) < 1e-100:
        # two terms are exact to double precision; later terms would only underflow
        v = rgamma(mu) + z * rgamma(lam + mu)
        return EvalResult(v, 2 * EPS * abs(v), Method.SERIES)
    res = _series(lambda n: _wright_term(z, n, lam * n + mu), _ctl(ctl))
    if lam == 1.0 and res.accuracy_loss:
        return _bessel_form(mu, z)
    return res


def _bessel_form(mu: float, z: float) -> EvalResult:
    # W_{1,mu}(z) = z^((1-mu)/2) I_{mu-1}(2 sqrt z), with J in place of I for z < 0
    r = math.sqrt(abs(z))
    if z < 0.0:
        v = r ** (1.0 - mu) * float(sps.jv(mu - 1.0, 2.0 * r))
        err = 1e-14 * r ** (1.0 - mu)
    else:
        v = r ** (1.0 - mu) * float(sps.iv(mu - 1.0, 2.0 * r))
        err = 1e-14 * abs(v)
    return EvalResult(v, err, Method.CLOSED_FORM)


def _series(term, ctl):
    return sum_series(term, ctl)


def _wright_term(z: float, n: int, gamma_arg: float) -> float:
    # z^n/n! by logs only when the direct product would overflow
    if n < 150 and abs(gamma_arg) < 160.0:
        p = z ** n / math.factorial(n) if n < 20 else math.exp(n * math.log(abs(z)) - math.lgamma(n + 1.0))
        if n >= 20 and z < 0 and n % 2:
            p = -p
        if math.isfinite(p) and p != 0.0:
            return p * rgamma(gamma_arg)
    return coefficient_term(z, n, gamma_arg, math.lgamma(n + 1.0))


# --------------------------------------------------------------------------
# series forms of M and F


def m_series(nu: float, x: float, ctl: SeriesControl | None = None) -> EvalResult:
    """M_nu(x) = sum (-x)^n / (n! Gamma(1 - nu - nu n)), valid for any real x."""
    nu = _check_nu(nu)
    return wright_w(WrightParams(-nu, 1.0 - nu), -float(x), ctl)


def f_series(nu: float, z: float, ctl: SeriesControl | None = None) -> EvalResult:
    """F_nu(z) by its reflected series -(1/pi) sum (-z)^n Gamma(nu n + 1) sin(pi nu n) / n!.

    Independent of the M-Wright dispatcher; used to cross-check F = nu z M.
    """
    nu = _check_nu(nu)
    z = float(z)
    if z == 0.0:
        return EvalResult(0.0, 0.0, Method.SERIES)

    def term(n):
        if n == 0:
            return 0.0
        s = math.sin(math.pi * nu * n)
        lg = math.lgamma(nu * n + 1.0) - math.lgamma(n + 1.0) + n * math.log(abs(z))
        if lg > 700:
            return math.inf
        sign = -1.0 if (z > 0 and n % 2) else 1.0
        return -sign * s * math.exp(lg) / math.pi

    return sum_series(term, _ctl(ctl))


# --------------------------------------------------------------------------
# closed forms


def _close(a: float, b: float) -> bool:
    return abs(a - b) < 1e-15


def m_closed_form(nu: float, x: float) -> EvalResult | None:
    """Closed form of M_nu(x) for nu in {1/2, 1/3, 2/3}; ``None`` otherwise."""
    x = float(x)
    if _close(nu, 0.5):
        v = math.exp(-x * x / 4.0) / SQRT_PI
        return EvalResult(v, 4 * EPS * abs(v), Method.CLOSED_FORM)
    if _close(nu, 1.0 / 3.0):
        ai, _ = airy(x / 3.0 ** (1.0 / 3.0))
        c = 3.0 ** (2.0 / 3.0)
        return EvalResult(c * ai.value, c * ai.err_est + 4 * EPS * abs(c * ai.value), Method.CLOSED_FORM)
    if _close(nu, 2.0 / 3.0):
        arg = x * x / 3.0 ** (4.0 / 3.0)
        c = 3.0 ** (-2.0 / 3.0)
        if x < 0.0 and arg > AIRY_SWITCH:
            # exp(-2x^3/27) = exp(zeta(arg)) exactly, so use the scaled Airy pair
            sa, sap = airy_scaled(arg)
            v = c * (3.0 ** (1.0 / 3.0) * x * sa - 3.0 * sap)
            return EvalResult(v, 16 * EPS * c * (3.0 ** (1.0 / 3.0) * abs(x * sa) + 3.0 * abs(sap)),
                              Method.CLOSED_FORM)
        ai, aip = airy(arg)
        damp = math.exp(-2.0 * x ** 3 / 27.0)
        core = 3.0 ** (1.0 / 3.0) * x * ai.value - 3.0 * aip.value
        v = c * core * damp
        err = c * damp * (3.0 ** (1.0 / 3.0) * abs(x) * ai.err_est + 3.0 * aip.err_est) + 8 * EPS * abs(v)
        return EvalResult(v, err, Method.CLOSED_FORM)
    return None


# --------------------------------------------------------------------------
# Liemert-Kleine integral and its relatives


def lk_kernel(nu: float, phi: float) -> float:
    """C_nu(phi) = sin((1-nu) phi)/sin(phi) * (sin(nu phi)/sin(phi))^(nu/(1-nu))."""
    p = nu / (1.0 - nu)
    if phi <= 1e-8:
        return (1.0 - nu) * nu ** p * (1.0 + phi * phi * (1.0 - (1.0 - nu) ** 2 + p * (1.0 - nu * nu)) / 6.0)
    s = math.sin(phi)
    if s <= 0.0:
        return math.inf
    return math.sin((1.0 - nu) * phi) / s * (math.sin(nu * phi) / s) ** p


def _lk_quad(fun, nu: float, y: float, tol: float = 1e-13) -> tuple[float, float]:
    """Integrate fun(phi) over [0, pi] with breakpoints at the expected peak."""
    pts = []
    if y > 1.0:
        w = min(math.pi / 2, 4.0 / math.sqrt(y))
        pts += [w / 4, w]
    if y < 1.0:
        d = max(y ** (1.0 - nu), 1e-6)
        if d < 1.0:
            pts += [math.pi - d]
    pts = sorted(p for p in pts if 0 < p < math.pi)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", integrate.IntegrationWarning)
        val, err = integrate.quad(fun, 0.0, math.pi, points=pts or None, epsabs=0.0,
                                  epsrel=tol, limit=400)
    return val, err


def m_lk_integral(nu: float, x: float) -> EvalResult:
    """M_nu(x), x > 0, by the Liemert-Kleine integral over [0, pi]."""
    nu = _check_nu(nu)
    x = float(x)
    if not x > 0.0:
        raise DomainError(f"Liemert-Kleine integral needs x > 0, got {x}")
    y = x ** (1.0 / (1.0 - nu))

    def fun(phi):
        c = lk_kernel(nu, phi)
        if not math.isfinite(c):
            return 0.0
        return c * math.exp(-c * y)

    val, err = _lk_quad(fun, nu, y)
    pref = x ** (nu / (1.0 - nu)) / ((1.0 - nu) * math.pi)
    v = pref * val
    return EvalResult(v, pref * err + 8 * EPS * abs(v), Method.INTEGRAL)


def step_lk_integral(nu: float, x: float) -> EvalResult:
    """W_{-nu,1}(-x) = int_x^inf M_nu = (1/pi) int_0^pi exp(-C_nu(phi) x^(1/(1-nu))) dphi."""
    nu = _check_nu(nu)
    x = float(x)
    if x < 0:
        raise DomainError("step-response integral needs x >= 0")
    if x == 0.0:
        return EvalResult(1.0, 0.0, Method.CLOSED_FORM)
    y = x ** (1.0 / (1.0 - nu))

    def fun(phi):
        c = lk_kernel(nu, phi)
        return 0.0 if not math.isfinite(c) else math.exp(-c * y)

    val, err = _lk_quad(fun, nu, y)
    v = val / math.pi
    return EvalResult(v, err / math.pi + 8 * EPS * abs(v), Method.INTEGRAL)


def mu_nu_lk_integral(nu: float, x: float) -> EvalResult:
    """W_{-nu,nu}(-x) = int_x^inf F_nu = (nu/pi) int_0^pi C^(nu-1) Gamma(2-nu, C y) dphi."""
    nu = _check_nu(nu)
    x = float(x)
    if x < 0:
        raise DomainError("integral form needs x >= 0")
    y = x ** (1.0 / (1.0 - nu))
    a = 2.0 - nu
    ga = math.gamma(a)

    def fun(phi):
        c = lk_kernel(nu, phi)
        if not math.isfinite(c):
            return 0.0
        return c ** (nu - 1.0) * ga * sps.gammaincc(a, c * y)

    val, err = _lk_quad(fun, nu, max(y, 1e-300))
    v = nu * val / math.pi
    return EvalResult(v, nu * err / math.pi + 8 * EPS * abs(v), Method.INTEGRAL)


# --------------------------------------------------------------------------
# saddle-point asymptotics


def asymptotic_coefficients(nu: float) -> tuple[float, float]:
    """(a(nu), b(nu)) of the saddle-point approximation of M_nu(y/nu)."""
    nu = _check_nu(nu)
    return 1.0 / math.sqrt(2.0 * math.pi * (1.0 - nu)), (1.0 - nu) / nu


def m_asymptotic(nu: float, y: float) -> EvalResult:
    """Leading saddle-point approximation of M_nu(y/nu) as y -> +inf.

    Note the argument convention: the approximation is returned for M at
    y/nu, not at y. ``err_est`` is the next-order relative scale times the
    value.
    """
    nu = _check_nu(nu)
    y = float(y)
    if not y > 0.0:
        raise DomainError(f"asymptotic form needs y > 0, got {y}")
    a, b = asymptotic_coefficients(nu)
    log_v = math.log(a) + (nu - 0.5) / (1.0 - nu) * math.log(y) - b * y ** (1.0 / (1.0 - nu))
    v = math.exp(log_v) if log_v > -745.0 else 0.0
    rel = y ** (-1.0 / (1.0 - nu)) / (1.0 - nu)
    return EvalResult(v, rel * v, Method.ASYMPTOTIC)


def _kernel_curvature(nu: float) -> float:
    h = 1e-3
    c0 = lk_kernel(nu, 0.0)
    return (lk_kernel(nu, h) - c0) / (h * h)  # C(phi) ~ c0 + k phi^2


def lk_peak_width(nu: float, x: float) -> float:
    """Width of the Liemert-Kleine integrand peak at phi = 0, relative to pi."""
    y = x ** (1.0 / (1.0 - nu))
    k = _kernel_curvature(nu)
    return 1.0 / math.sqrt(max(y * k, 1e-300)) / math.pi


# --------------------------------------------------------------------------
# dispatcher


def _series_limit(nu: float) -> float:
    table = get_config().thresholds.m_series_max
    return float(np.interp(nu, [p[0] for p in table], [p[1] for p in table]))


def wright_m(nu: float, x: float, ctl: SeriesControl | None = None) -> EvalResult:
    """M-Wright function M_nu(x) with automatic branch selection.

    For x >= 0: closed form when one exists, else the series while its
    cancellation guard holds, else the Liemert-Kleine integral, and the
    saddle-point form once the integrand peak gets too narrow to resolve.
    Negative arguments use the closed form when there is one, else the
    series.
    """
    nu = _check_nu(nu)
    x = float(x)
    if not math.isfinite(x):
        raise DomainError("wright_m needs a finite argument")
    cf = m_closed_form(nu, x)
    if cf is not None:
        return cf
    if x < 0.0:
        return m_series(nu, x, ctl)
    if x == 0.0:
        return EvalResult(rgamma(1.0 - nu), 0.0, Method.SERIES)
    if x <= _series_limit(nu):
        res = m_series(nu, x, ctl)
        if not res.accuracy_loss:
            return res
    if lk_peak_width(nu, x) < get_config().thresholds.lk_min_width:
        return m_asymptotic(nu, nu * x)
    return m_lk_integral(nu, x)


def wright_f(nu: float, z: float, ctl: SeriesControl | None = None) -> EvalResult:
    """F_nu(z) = W_{-nu,0}(-z); equals nu z M_nu(z), which is used for z >= 0."""
    nu = _check_nu(nu)
    z = float(z)
    if z == 0.0:
        return EvalResult(0.0, 0.0, Method.SERIES)
    if z < 0.0:
        return wright_w(WrightParams(-nu, 0.0), -z, ctl)
    m = wright_m(nu, z, ctl)
    return EvalResult(nu * z * m.value, nu * z * m.err_est + 2 * EPS * abs(nu * z * m.value),
                      m.method, m.accuracy_loss)


def wright_second_kind(nu: float, mu: float, x: float, ctl: SeriesControl | None = None) -> EvalResult:
    """W_{-nu,mu}(-x) for x >= 0 and 0 < nu < 1.

    mu = 1-nu and mu = 0 reduce to M and F; mu = 1 and mu = nu are tails of
    M and F and have integral forms. Other mu use the raw series.
    """
    nu = _check_nu(nu)
    x = float(x)
    if x < 0.0:
        raise DomainError("wright_second_kind takes x >= 0 (argument -x)")
    if _close(mu, 1.0 - nu):
        return wright_m(nu, x, ctl)
    if _close(mu, 0.0):
        return wright_f(nu, x, ctl)
    if x == 0.0:
        return EvalResult(rgamma(mu), 0.0, Method.SERIES)
    if x <= _series_limit(nu):
        res = wright_w(WrightParams(-nu, mu), -x, ctl)
        if not res.accuracy_loss:
            return res
    if _close(mu, 1.0):
        return step_lk_integral(nu, x)
    if _close(mu, nu):
        return mu_nu_lk_integral(nu, x)
    return wright_w(WrightParams(-nu, mu), -x, ctl)


def m_symmetric_pdf(nu: float, x: float) -> EvalResult:
    """Symmetric M-Wright density (1/2) M_nu(|x|) on the real line."""
    return wright_m(nu, abs(float(x))).scaled(0.5)


def m_two_var(nu: float, x: float, t: float) -> EvalResult:
    """M_nu(x, t) = t^-nu M_nu(x t^-nu), a density in x evolving in t."""
    t = float(t)
    if not t > 0.0:
        raise DomainError(f"m_two_var needs t > 0, got {t}")
    nu = _check_nu(nu)
    s = t ** -nu
    return wright_m(nu, x * s).scaled(s)


__all__ = [
    "Kind", "WrightParams", "wright_w", "m_series", "f_series", "m_closed_form",
    "lk_kernel", "m_lk_integral", "step_lk_integral", "mu_nu_lk_integral",
    "asymptotic_coefficients", "m_asymptotic", "lk_peak_width", "wright_m", "wright_f",
    "wright_second_kind", "m_symmetric_pdf", "m_two_var", "log_abs_rgamma",
]
