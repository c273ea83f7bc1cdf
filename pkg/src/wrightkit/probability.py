"""Moments, characteristic function, transforms of M_nu(x, t) and the
composition law M_{lambda mu} = int M_lambda(x, tau) M_mu(tau, t) dtau."""
from __future__ import annotations

import enum
import math

from .errors import DomainError
from .fractional import rl_integral
from .results import EvalResult, Method
from .special import gamma, mittag_leffler, rgamma
from .transforms import cosine_transform, integrate
from .wright import asymptotic_coefficients, m_two_var, wright_m


class Axis(str, enum.Enum):
    T = "T"
    X = "X"
    FOURIER = "FOURIER"


def _check_nu0(nu: float) -> float:
    nu = float(nu)
    if not 0.0 <= nu < 1.0:
        raise DomainError(f"nu must lie in [0, 1), got {nu}")
    return nu


def _m(nu: float, x: float) -> float:
    # M_0(x) = exp(-x) is admitted here only
    return math.exp(-x) if nu == 0.0 else wright_m(nu, x).value


def m_abs_moment(nu: float, delta: float) -> float:
    """int_0^inf x^delta M_nu(x) dx = Gamma(delta+1)/Gamma(nu delta+1), delta > -1, 0 <= nu < 1."""
    nu = _check_nu0(nu)
    if not delta > -1.0:
        raise DomainError(f"moment order must exceed -1, got {delta}")
    return gamma(delta + 1.0).value * rgamma(nu * delta + 1.0)


def m_abs_moment_quadrature(nu: float, delta: float) -> EvalResult:
    """The same moment by quadrature.

    On [0, 1] the weight x^delta is integrated exactly by the product rule of
    the fractional integral, J^(delta+1) applied to tau -> M(1 - tau) at 1;
    [1, inf) is ordinary adaptive quadrature.
    """
    nu = _check_nu0(nu)
    if not delta > -1.0:
        raise DomainError(f"moment order must exceed -1, got {delta}")
    a = delta + 1.0
    near = rl_integral(lambda tau: _m(nu, 1.0 - tau), a, 1.0, n_panels=64)
    near_val = near.value * gamma(a).value
    far = integrate(lambda x: x ** delta * _m(nu, x), 1.0, math.inf)
    v = near_val + far.value
    return EvalResult(v, near.err_est * abs(gamma(a).value) + far.err_est, Method.INTEGRAL)


def m_integer_moment_via_ml(nu: float, n: int) -> float:
    """n-th moment as (-1)^n d^n/ds^n E_nu(-s) at s = 0.

    The n-th Taylor coefficient of E_nu(-s) is (-1)^n / Gamma(nu n + 1), so the
    derivative is n! times that.
    """
    nu = _check_nu0(nu)
    if n < 0 or int(n) != n:
        raise DomainError("moment index must be a non-negative integer")
    n = int(n)
    coeff = (-1.0) ** n * rgamma(nu * n + 1.0)
    return (-1.0) ** n * math.factorial(n) * coeff


def m_char_fn(nu: float, kappa: float) -> float:
    """Characteristic function of the symmetric density M_nu(|x|)/2: E_{2 nu}(-kappa^2)."""
    nu = float(nu)
    if not 0.0 < nu < 1.0:
        raise DomainError(f"nu must lie in (0, 1), got {nu}")
    return mittag_leffler(2.0 * nu, 1.0, -kappa * kappa).value


def m_char_fn_quadrature(nu: float, kappa: float) -> EvalResult:
    """int_0^inf cos(kappa x) M_nu(x) dx by panel quadrature."""
    return cosine_transform(lambda x: wright_m(nu, x).value, kappa)


def mvar_transform(axis: Axis | str, nu: float, fixed: float, s_or_kappa: float) -> float:
    """Closed-form transforms of M_nu(x, t) = t^-nu M_nu(x t^-nu).

    T:       Laplace in t at fixed x:       s^(nu-1) exp(-x s^nu)
    X:       Laplace in x at fixed t:       E_nu(-s t^nu)
    FOURIER: Fourier in x of M_nu(|x|, t):  2 E_{2nu}(-kappa^2 t^(2nu))
    """
    axis = Axis(axis)
    nu = float(nu)
    if not 0.0 < nu < 1.0:
        raise DomainError(f"nu must lie in (0, 1), got {nu}")
    if axis is Axis.T:
        s = s_or_kappa
        if not s > 0:
            raise DomainError("s must be positive")
        return s ** (nu - 1.0) * math.exp(-fixed * s ** nu)
    if axis is Axis.X:
        if fixed <= 0:
            raise DomainError("t must be positive")
        return mittag_leffler(nu, 1.0, -s_or_kappa * fixed ** nu).value
    if fixed <= 0:
        raise DomainError("t must be positive")
    k = s_or_kappa
    return 2.0 * mittag_leffler(2.0 * nu, 1.0, -k * k * fixed ** (2.0 * nu)).value


def _tau_cutoff(mu: float, t: float, tol: float = 1e-17) -> float:
    # M_mu(tau t^-mu) falls below tol once b y^(1/(1-mu)) > -log(tol), y = mu tau t^-mu
    _, b = asymptotic_coefficients(mu)
    y = (-math.log(tol) / b) ** (1.0 - mu)
    return y / mu * t ** mu


def composition_check(lam: float, mu_c: float, x: float, t: float) -> tuple[float, float]:
    """(M_{lam mu}(x, t), int_0^inf M_lam(x, tau) M_mu(tau, t) dtau).

    mu_c = 1 (or lam = 1) makes one factor a point mass and the integral
    collapses to the other factor.
    """
    if not (0 < lam <= 1 and 0 < mu_c <= 1):
        raise DomainError("lambda and mu must lie in (0, 1]")
    if not (x > 0 and t > 0):
        raise DomainError("x and t must be positive")
    nu = lam * mu_c
    if nu == 1.0:
        raise DomainError("lambda = mu = 1 is a point mass in x")
    lhs = m_two_var(nu, x, t).value
    if mu_c == 1.0:
        return lhs, m_two_var(lam, x, t).value
    if lam == 1.0:
        return lhs, m_two_var(mu_c, x, t).value
    cut = _tau_cutoff(mu_c, t)

    def g(tau):
        if tau <= 0.0:
            return 0.0
        return m_two_var(lam, x, tau).value * m_two_var(mu_c, tau, t).value

    pts = [cut * f for f in (0.01, 0.05, 0.2, 0.5)]
    rhs = integrate(g, 0.0, cut, points=pts)
    return lhs, rhs.value


__all__ = [
    "Axis", "m_abs_moment", "m_abs_moment_quadrature", "m_integer_moment_via_ml", "m_char_fn",
    "m_char_fn_quadrature", "mvar_transform", "composition_check",
]
