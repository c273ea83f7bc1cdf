"""Scalar special functions on the real line.

Gamma and its reciprocal, erfc, the Airy pair Ai/Ai', and the two-parameter
Mittag-Leffler function. All series in the package go through
:func:`sum_series`, which applies one truncation policy and one cancellation
guard everywhere.
"""
from __future__ import annotations

import cmath
import math
import warnings
from typing import Callable

import numpy as np
from scipy import integrate

from .errors import AccuracyLossWarning, DomainError, PoleError
from .results import DEFAULT_SERIES, EvalResult, Method, SeriesControl

EPS = float(np.finfo(float).eps)
SQRT_2PI = math.sqrt(2.0 * math.pi)
GAMMA_OVERFLOW = 171.6243769563027

# Lanczos coefficients for g = 671/128 - 1/2, n = 15, fitted by least squares in
# 50-digit arithmetic (relative accuracy a few ulp on x >= 0.5).
_LANCZOS_G = 671.0 / 128.0 - 0.5
_LANCZOS_P = (
    0.99999999999999999996,
    57.156235665862868827,
    -59.597960355469547667,
    14.136097974741846288,
    -0.49191382127413958011,
    0.000034097587719123171868,
    0.000045598719563567622342,
    -0.000093581939719649339626,
    0.00014233731137098211261,
    -0.00017595026176144074943,
    0.00016715101441313854832,
    -0.00011522944875715177594,
    0.000053792311607317123787,
    -0.000015136280776722976321,
    1.933036771621752942e-6,
)


def _is_nonpositive_integer(x: float) -> bool:
    return x <= 0.0 and x == math.floor(x)


def sinpi(x: float) -> float:
    """sin(pi*x) with exact argument reduction, so zeros at integers are exact."""
    r = math.fmod(x, 2.0)
    if r > 1.0:
        r -= 2.0
    elif r < -1.0:
        r += 2.0
    if r > 0.5:
        r = 1.0 - r
    elif r < -0.5:
        r = -1.0 - r
    return math.sin(math.pi * r)


def _lanczos_sum(x: float) -> float:
    # x is the shifted argument (Gamma(x + 1))
    a = _LANCZOS_P[0]
    for i in range(1, len(_LANCZOS_P)):
        a += _LANCZOS_P[i] / (x + i)
    return a


def _gamma_core(x: float) -> float:
    """Gamma(x) for 0.5 <= x < GAMMA_OVERFLOW."""
    if x == math.floor(x) and x <= 21.0:
        return float(math.factorial(int(x) - 1))
    xm = x - 1.0
    t = xm + _LANCZOS_G + 0.5
    # t is rounded; the large exponent below would amplify that, so carry the
    # rounding error (two-sum) into a correction factor
    bb = t - xm
    dt = (xm - (t - bb)) + (_LANCZOS_G + 0.5 - bb)
    a = _lanczos_sum(xm)
    half = t ** ((xm + 0.5) / 2.0)
    corr = math.exp(dt * ((xm + 0.5) / t - 1.0))
    return SQRT_2PI * half * math.exp(-t) * half * a * corr


def _gamma_reflected(x: float) -> float:
    """Gamma(1 - x) for x < 1/2, via (-x) Gamma(-x) when 1 - x itself would round."""
    if x <= -0.5:
        return -x * _gamma_core(-x)
    return _gamma_core(1.0 - x)


def _lgamma_core(x: float) -> float:
    """log Gamma(x) for x >= 0.5."""
    xm = x - 1.0
    t = xm + _LANCZOS_G + 0.5
    return math.log(SQRT_2PI * _lanczos_sum(xm)) + (xm + 0.5) * math.log(t) - t


def log_abs_rgamma(x: float) -> tuple[float, float]:
    """Return (log|1/Gamma(x)|, sign(1/Gamma(x))); sign is 0 at the poles."""
    if _is_nonpositive_integer(x):
        return -math.inf, 0.0
    if x >= 0.5:
        return -_lgamma_core(x), 1.0
    s = sinpi(x)
    return _lgamma_core(1.0 - x) + math.log(abs(s) / math.pi), math.copysign(1.0, s)


def gamma(x: float) -> EvalResult:
    """Gamma function, with the reflection formula below 1/2.

    Raises :class:`PoleError` at non-positive integers and ``OverflowError``
    when the value is not representable.
    """
    x = float(x)
    if not math.isfinite(x):
        raise DomainError(f"gamma needs a finite argument, got {x}")
    if _is_nonpositive_integer(x):
        raise PoleError(f"Gamma has a pole at {x:g}")
    if x >= 0.5:
        if x >= GAMMA_OVERFLOW:
            raise OverflowError(f"Gamma({x:g}) exceeds the double range")
        v = _gamma_core(x)
        return EvalResult(v, 8 * EPS * abs(v), Method.CLOSED_FORM)
    s = sinpi(x)
    if 1.0 - x >= GAMMA_OVERFLOW:
        lg, _ = log_abs_rgamma(x)
        v = math.copysign(math.exp(-lg), s)
    else:
        v = math.pi / (s * _gamma_reflected(x))
    if not math.isfinite(v):
        raise OverflowError(f"Gamma({x:g}) exceeds the double range")
    return EvalResult(v, 12 * EPS * abs(v), Method.REFLECTION)


def rgamma(x: float) -> float:
    """Reciprocal Gamma 1/Gamma(x): entire, exactly zero at 0, -1, -2, ..."""
    x = float(x)
    if _is_nonpositive_integer(x):
        return 0.0
    if x >= 0.5:
        if x >= GAMMA_OVERFLOW:
            return math.exp(-_lgamma_core(x))
        return 1.0 / _gamma_core(x)
    s = sinpi(x)
    if 1.0 - x >= GAMMA_OVERFLOW:
        lg, _ = log_abs_rgamma(x)
        return math.copysign(math.exp(lg) if lg < 709.0 else math.inf, s)
    return s * _gamma_reflected(x) / math.pi


def erfc(x: float) -> EvalResult:
    """Complementary error function (stdlib implementation)."""
    v = math.erfc(float(x))
    return EvalResult(v, 2 * EPS * abs(v), Method.CLOSED_FORM)


# --------------------------------------------------------------------------
# generic series summation


def sum_series(term: Callable[[int], float], ctl: SeriesControl = DEFAULT_SERIES,
               start: int = 0) -> EvalResult:
    """Sum ``term(n)`` for n = start, start+1, ... under ``ctl``.

    Exact zero terms (poles of the reciprocal Gamma) are neutral for the
    stopping rule. ``accuracy_loss`` is set when the cancellation guard trips
    or the budget runs out before convergence.
    """
    s = 0.0
    comp = 0.0  # Kahan compensation
    abs_sum = 0.0
    max_term = 0.0
    small = 0
    last = 0.0
    converged = False
    n = start
    for n in range(start, start + ctl.max_terms):
        t = term(n)
        if not math.isfinite(t):
            break
        y = t - comp
        tmp = s + y
        comp = (tmp - s) - y
        s = tmp
        at = abs(t)
        abs_sum += at
        max_term = max(max_term, at)
        if t == 0.0:
            if s == 0.0 and n - start >= 10:
                converged = True
                break
            if small:
                # underflow after the terms were already negligible, not a pole
                small += 1
                if small >= ctl.consecutive_small:
                    converged = True
                    break
            continue
        last = at
        if at <= ctl.rel_tol * abs(s):
            small += 1
            if small >= ctl.consecutive_small:
                converged = True
                break
        else:
            small = 0
    guard = max_term * EPS > ctl.rel_tol * abs(s)
    err = 2.0 * EPS * abs_sum + last
    if not converged:
        err = max(err, abs_sum)
    return EvalResult(s, err, Method.SERIES, accuracy_loss=guard or not converged)


def _power_term(log_mag: float, sign: float) -> float:
    if sign == 0.0:
        return 0.0
    if log_mag > 709.0:
        return math.copysign(math.inf, sign)
    return math.copysign(math.exp(log_mag), sign)


def coefficient_term(z: float, n: int, gamma_arg: float, extra_lgamma: float = 0.0) -> float:
    """z**n * rgamma(gamma_arg) / exp(extra_lgamma), evaluated without overflow."""
    lr, sr = log_abs_rgamma(gamma_arg)
    if sr == 0.0:
        return 0.0
    if z == 0.0:
        return (1.0 if n == 0 else 0.0) * sr * math.exp(lr - extra_lgamma)
    lz = n * math.log(abs(z))
    sz = -1.0 if (z < 0 and n % 2) else 1.0
    return _power_term(lz + lr - extra_lgamma, sz * sr)


# --------------------------------------------------------------------------
# Airy functions

AI0 = 0.355028053887817239260063186004  # 1/(3^(2/3) Gamma(2/3))
AIP0 = 0.258819403792806798405183560189  # 1/(3^(1/3) Gamma(1/3))
AIRY_SWITCH = 2.0
AIRY_NEG_SWITCH = -8.0


def _airy_maclaurin(x: float) -> tuple[EvalResult, EvalResult]:
    x3 = x * x * x
    f = fp = 0.0
    g = gp = 0.0
    tf, tg = 1.0, x          # terms of f and g
    tfp, tgp = 0.0, 1.0      # terms of f' and g'
    absum = abs_d = 0.0
    for k in range(0, 200):
        if k > 0:
            tf *= x3 / ((3 * k - 1) * (3 * k))
            tg *= x3 / ((3 * k) * (3 * k + 1))
            tfp = x * x / 2.0 if k == 1 else tfp * x3 / ((3 * k - 1) * (3 * k - 3))
            tgp *= x3 / ((3 * k) * (3 * k - 2))
        f += tf
        g += tg
        fp += tfp
        gp += tgp
        absum += AI0 * abs(tf) + AIP0 * abs(tg)
        abs_d += AI0 * abs(tfp) + AIP0 * abs(tgp)
        if k > 2 and max(abs(tf), abs(tg), abs(tfp), abs(tgp)) < 1e-18 * max(abs(f), abs(g), abs(fp), abs(gp), 1e-300):
            break
    ai = AI0 * f - AIP0 * g
    aip = AI0 * fp - AIP0 * gp
    return (EvalResult(ai, 4 * EPS * absum, Method.SERIES),
            EvalResult(aip, 4 * EPS * abs_d, Method.SERIES))


def _bessel_k_scaled(nu: float, zeta: float) -> float:
    """exp(zeta) * K_nu(zeta) by the trapezoid rule on the cosh integral."""
    # the peak at t = 0 has width ~ 1/sqrt(zeta)
    h = min(0.05, 0.2 / math.sqrt(zeta))
    tmax = math.acosh(1.0 + 45.0 / zeta)
    t = np.arange(0.0, tmax + h, h)
    vals = np.exp(-zeta * (np.cosh(t) - 1.0)) * np.cosh(nu * t)
    return h * (vals.sum() - 0.5 * vals[0])


def airy_scaled(x: float) -> tuple[float, float]:
    """exp(zeta) Ai(x) and exp(zeta) Ai'(x), zeta = (2/3) x^1.5, for x > 2."""
    if not x > AIRY_SWITCH:
        raise DomainError(f"scaled Airy form is used for x > {AIRY_SWITCH}")
    zeta = 2.0 / 3.0 * x ** 1.5
    k13 = _bessel_k_scaled(1.0 / 3.0, zeta)
    k23 = _bessel_k_scaled(2.0 / 3.0, zeta)
    return math.sqrt(x / 3.0) / math.pi * k13, -x / (math.pi * math.sqrt(3.0)) * k23


def _airy_positive_integral(x: float) -> tuple[EvalResult, EvalResult]:
    damp = math.exp(-2.0 / 3.0 * x ** 1.5)
    sa, sap = airy_scaled(x)
    ai, aip = sa * damp, sap * damp
    return (EvalResult(ai, 16 * EPS * abs(ai), Method.INTEGRAL),
            EvalResult(aip, 16 * EPS * abs(aip), Method.INTEGRAL))


def _airy_negative_asymptotic(x: float) -> tuple[EvalResult, EvalResult]:
    y = -x
    zeta = 2.0 / 3.0 * y ** 1.5
    u = [1.0]
    v = [1.0]
    for k in range(1, 12):
        u.append(u[-1] * (6 * k - 5) * (6 * k - 3) * (6 * k - 1) / ((2 * k - 1) * 216.0 * k))
        v.append(-(6 * k + 1) / (6 * k - 1) * u[-1])
    pe = po = qe = qo = 0.0
    for k in range(0, 6):
        sgn = -1.0 if k % 2 else 1.0
        pe += sgn * u[2 * k] / zeta ** (2 * k)
        po += sgn * u[2 * k + 1] / zeta ** (2 * k + 1)
        qe += sgn * v[2 * k] / zeta ** (2 * k)
        qo += sgn * v[2 * k + 1] / zeta ** (2 * k + 1)
    ph = zeta - math.pi / 4.0
    c, s = math.cos(ph), math.sin(ph)
    pref = 1.0 / math.sqrt(math.pi)
    ai = pref * y ** -0.25 * (c * pe + s * po)
    aip = pref * y ** 0.25 * (s * qe - c * qo)
    tail = u[11] / zeta ** 11
    return (EvalResult(ai, pref * y ** -0.25 * tail + 8 * EPS, Method.ASYMPTOTIC),
            EvalResult(aip, pref * y ** 0.25 * tail + 8 * EPS, Method.ASYMPTOTIC))


def airy(x: float) -> tuple[EvalResult, EvalResult]:
    """Airy function Ai(x) and its derivative Ai'(x).

    Maclaurin series on [-8, 2]; beyond 2 the exponentially scaled
    modified-Bessel integral; below -8 the oscillatory asymptotic expansion.
    """
    x = float(x)
    if not math.isfinite(x):
        raise DomainError("airy needs a finite argument")
    if x > AIRY_SWITCH:
        return _airy_positive_integral(x)
    if x < AIRY_NEG_SWITCH:
        return _airy_negative_asymptotic(x)
    return _airy_maclaurin(x)


# --------------------------------------------------------------------------
# Mittag-Leffler function

# |x| beyond which the series is skipped for negative arguments (0 < alpha < 1).
# Obtained by comparing the series and the algebraic expansion at overlap
# (see config.calibrate_ml_switch); interpolated linearly in alpha.
ML_SWITCH_TABLE = (
    (0.1, 1.2),
    (0.25, 2.0),
    (0.5, 4.5),
    (0.75, 7.0),
    (0.9, 9.0),
    (1.0, 12.0),
)


def ml_switch(alpha: float) -> float:
    a = [p[0] for p in ML_SWITCH_TABLE]
    s = [p[1] for p in ML_SWITCH_TABLE]
    return float(np.interp(alpha, a, s))


def _ml_series(alpha: float, beta: float, x: float, ctl: SeriesControl) -> EvalResult:
    return sum_series(lambda n: coefficient_term(x, n, alpha * n + beta), ctl)


def _ml_asymptotic_negative(alpha: float, beta: float, x: float, ctl: SeriesControl) -> EvalResult | None:
    """Algebraic expansion plus the exponential contributions for alpha >= 1.

    Returns None when optimal truncation cannot reach ``ctl.rel_tol``.
    """
    z = complex(x, 0.0)
    expo = 0.0
    if alpha >= 1.0:
        # roots z_m = |x|^(1/alpha) exp(i(pi + 2 pi m)/alpha) with -pi < arg <= pi
        r = abs(x) ** (1.0 / alpha)
        acc = 0.0 + 0.0j
        for m in range(-int(alpha) - 2, int(alpha) + 2):
            arg = (math.pi + 2 * math.pi * m) / alpha
            if -math.pi < arg <= math.pi + 1e-15:
                zm = cmath.rect(r, arg)
                acc += zm ** (1.0 - beta) * cmath.exp(zm)
        expo = (acc / alpha).real
    total = 0.0
    prev = math.inf
    err = 0.0
    last_k = 0
    for k in range(1, 200):
        t = -rgamma(beta - alpha * k) * x ** (-k)
        at = abs(t)
        if at == 0.0:
            continue
        if at > prev:
            err = prev
            break
        total += t
        prev = at
        last_k = k
        if at <= ctl.rel_tol * max(abs(total + expo), 1e-300):
            err = at
            break
    else:
        if last_k > 150:
            err = prev
    val = total + expo
    err += 4 * EPS * abs(val)
    if err > 1e3 * ctl.rel_tol * max(abs(val), 1e-300) and err > 1e-15:
        return None
    return EvalResult(val, err, Method.ASYMPTOTIC)


def _ml_branch_cut(alpha: float, beta: float, x: float) -> EvalResult | None:
    """E_{a,b}(x), x < 0, 0 < a < 1, as the inverse Laplace transform at t = 1.

    s^(a-b) / (s^a - x) has no poles on the principal sheet, so the Bromwich
    integral collapses to the negative real axis.
    """
    lam = -x
    if beta - alpha >= 1.0:
        return None

    def im_f(r):
        sa = cmath.rect(r ** alpha, math.pi * alpha)
        num = cmath.rect(r ** (alpha - beta), math.pi * (alpha - beta))
        return (num / (sa + lam)).imag

    f = lambda r: math.exp(-r) * im_f(r)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        a, ea = integrate.quad(f, 0.0, 1.0, epsabs=1e-15, epsrel=1e-13, limit=200)
        b, eb = integrate.quad(f, 1.0, np.inf, epsabs=1e-15, epsrel=1e-13, limit=200)
    val = -(a + b) / math.pi
    return EvalResult(val, (ea + eb) / math.pi + 4 * EPS * abs(val), Method.INTEGRAL)


def mittag_leffler(alpha: float, beta: float, x: float, ctl: SeriesControl = DEFAULT_SERIES) -> EvalResult:
    """Two-parameter Mittag-Leffler function E_{alpha,beta}(x) for real x.

    The power series is used while its cancellation guard holds. For large
    negative arguments the algebraic expansion (with the exponentially
    small root contributions when alpha >= 1) takes over, and for
    0 < alpha < 1 a branch-cut integral serves as a final fallback.
    """
    alpha, beta, x = float(alpha), float(beta), float(x)
    if not alpha > 0.0:
        raise DomainError(f"Mittag-Leffler needs alpha > 0, got {alpha}")
    if not (math.isfinite(x) and math.isfinite(beta)):
        raise DomainError("Mittag-Leffler needs finite beta and x")
    if x == 0.0:
        return EvalResult(rgamma(beta), 0.0, Method.SERIES)
    if alpha == 1.0 and beta == 1.0:
        v = math.exp(x)
        return EvalResult(v, 2 * EPS * v, Method.CLOSED_FORM)
    if alpha == 2.0 and beta == 1.0 and x < 0:
        v = math.cos(math.sqrt(-x))
        return EvalResult(v, 4 * EPS, Method.CLOSED_FORM)
    skip_series = x < 0 and alpha < 1.0 and -x > ml_switch(alpha)
    res = None
    if not skip_series:
        res = _ml_series(alpha, beta, x, ctl)
        if not res.accuracy_loss or x > 0:
            return res
    if x < 0 and alpha < 2.0:
        asy = _ml_asymptotic_negative(alpha, beta, x, ctl)
        if asy is not None:
            return asy
        if alpha < 1.0:
            bc = _ml_branch_cut(alpha, beta, x)
            if bc is not None:
                return bc
    if res is None:
        res = _ml_series(alpha, beta, x, ctl)
    if res.err_est > 1e-8 * abs(res.value):
        warnings.warn(f"E_{{{alpha},{beta}}}({x}) lost accuracy to cancellation", AccuracyLossWarning, stacklevel=2)
    return res
