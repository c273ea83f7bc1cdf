"""Quadrature, forward Laplace and cosine transforms, and two Laplace inverters.

Inversion targets are the closed family coef * s^-mu * exp(-x s^nu) and
finite sums of such terms, which covers every pair the package needs. The
branch-cut inverter integrates along the negative real axis; the fixed
Talbot inverter deforms the Bromwich line into a cotangent contour. The two
share no code and serve as each other's oracle.
"""
from __future__ import annotations

import cmath
import enum
import math
import warnings
from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np
from scipy import integrate as spi
from scipy.interpolate import CubicSpline

from .config import get_config
from .errors import (ConvergenceError, DomainError, InstabilityWarning, OscillationWarning,
                     SupportTruncationWarning)
from .results import EvalResult, Method, QuadratureControl
from .special import EPS

Real = Callable[[float], float]


class Interp(str, enum.Enum):
    LINEAR = "piecewise_linear"
    CUBIC = "piecewise_cubic"


@dataclass(frozen=True, eq=False)
class SampledFunction:
    """Tabulated function; zero outside [abscissae[0], abscissae[-1]]."""

    abscissae: np.ndarray
    values: np.ndarray
    interp: Interp = Interp.LINEAR
    _spline: object = field(default=None, init=False, repr=False)

    def __post_init__(self):
        xs = np.asarray(self.abscissae, dtype=float)
        ys = np.asarray(self.values, dtype=float)
        if xs.ndim != 1 or ys.shape != xs.shape:
            raise DomainError("abscissae and values must be 1-D arrays of equal length")
        if xs.size < 2:
            raise DomainError("a sampled function needs at least 2 points")
        if not np.all(np.diff(xs) > 0):
            raise DomainError("abscissae must be strictly increasing")
        if not (np.all(np.isfinite(xs)) and np.all(np.isfinite(ys))):
            raise DomainError("sampled data must be finite")
        interp = Interp(self.interp)
        object.__setattr__(self, "abscissae", xs)
        object.__setattr__(self, "values", ys)
        object.__setattr__(self, "interp", interp)
        if interp is Interp.CUBIC:
            object.__setattr__(self, "_spline", CubicSpline(xs, ys, bc_type="not-a-knot"))

    @classmethod
    def from_callable(cls, f: Real, a: float, b: float, n: int = 513,
                      interp: Interp = Interp.LINEAR) -> "SampledFunction":
        xs = np.linspace(a, b, n)
        return cls(xs, np.array([f(x) for x in xs]), interp)

    @property
    def support(self) -> tuple[float, float]:
        return float(self.abscissae[0]), float(self.abscissae[-1])

    def __call__(self, x: float) -> float:
        lo, hi = self.support
        if x < lo or x > hi:
            return 0.0
        if self._spline is not None:
            return float(self._spline(x))
        return float(np.interp(x, self.abscissae, self.values))

    def derivative(self, x: float, order: int = 1) -> float:
        """Derivative of the data: spline derivative or 4th-order differences."""
        if order == 0:
            return self(x)
        if self._spline is not None:
            return float(self._spline(x, order))
        return _fd_derivative(self, x, order, float(np.min(np.diff(self.abscissae))), self.support)

    def is_zero(self) -> bool:
        return not np.any(self.values)


def _fd_derivative(f: Real, x: float, order: int, h: float, support=None) -> float:
    """Fourth-order finite difference, one-sided near the support ends."""
    lo, hi = support if support is not None else (-math.inf, math.inf)
    if order == 1:
        if x - 2 * h >= lo and x + 2 * h <= hi:
            return (f(x - 2 * h) - 8 * f(x - h) + 8 * f(x + h) - f(x + 2 * h)) / (12 * h)
        d = 1.0 if x - 2 * h < lo else -1.0
        c = (-25, 48, -36, 16, -3)
        return d * sum(ci * f(x + d * i * h) for i, ci in enumerate(c)) / (12 * h)
    if order == 2:
        if x - 2 * h >= lo and x + 2 * h <= hi:
            return (-f(x - 2 * h) + 16 * f(x - h) - 30 * f(x) + 16 * f(x + h) - f(x + 2 * h)) / (12 * h * h)
        d = 1.0 if x - 2 * h < lo else -1.0
        c = (45, -154, 214, -156, 61, -10)
        return sum(ci * f(x + d * i * h) for i, ci in enumerate(c)) / (12 * h * h)
    # higher orders by repeated first differences
    return _fd_derivative(lambda u: _fd_derivative(f, u, order - 1, h, support), x, 1, h, support)


# --------------------------------------------------------------------------
# quadrature


def _qctl(ctl: QuadratureControl | None) -> QuadratureControl:
    return ctl if ctl is not None else get_config().quadrature


def integrate(f: Real, a: float, b: float, ctl: QuadratureControl | None = None,
              points: Sequence[float] | None = None) -> EvalResult:
    """Adaptive Gauss-Kronrod integral of f over [a, b]; b may be +inf.

    Semi-infinite ranges are mapped onto a finite interval unless
    ``ctl.tail_cutoff`` is set, in which case the range is truncated and the
    size of the integrand at the cutoff is added to the error estimate.
    """
    ctl = _qctl(ctl)
    if not (math.isfinite(a) and a <= b):
        raise DomainError(f"bad integration range [{a}, {b}]")
    if a == b:
        return EvalResult(0.0, 0.0, Method.INTEGRAL)
    tail_err = 0.0
    if math.isinf(b) and ctl.tail_cutoff is not None:
        b = max(a, ctl.tail_cutoff)
        fb = abs(f(b))
        tail_err = fb * max(1.0, abs(b))
    pts = None
    if points is not None and math.isfinite(b):
        pts = sorted({p for p in points if a < p < b})[: max(ctl.max_subdivisions - 1, 1)] or None
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", spi.IntegrationWarning)
        if math.isinf(b) and points:
            split = max(p for p in points)
            if split > a:
                left = integrate(f, a, split, ctl, points)
                right = integrate(f, split, b, ctl)
                return EvalResult(left.value + right.value, left.err_est + right.err_est, Method.INTEGRAL)
        out = spi.quad(f, a, b, epsabs=ctl.abs_tol, epsrel=ctl.rel_tol,
                       limit=ctl.max_subdivisions, points=pts, full_output=1)
    val, err, info = out[0], out[1], out[2]
    ier = out[3] if len(out) > 3 and isinstance(out[3], str) else None
    if not math.isfinite(val):
        raise ConvergenceError("quadrature produced a non-finite value")
    if ier is not None and "maximum number of subdivisions" in ier and err > 1e3 * max(ctl.abs_tol, ctl.rel_tol * abs(val)):
        raise ConvergenceError(f"quadrature did not converge in {ctl.max_subdivisions} subdivisions")
    return EvalResult(val, err + tail_err + 4 * EPS * abs(val), Method.INTEGRAL)


def laplace_fwd(f: Real, s: float, ctl: QuadratureControl | None = None) -> EvalResult:
    """int_0^inf e^{-s t} f(t) dt for s > 0."""
    if not s > 0:
        raise DomainError(f"laplace_fwd needs s > 0, got {s}")
    split = 1.0 / s
    return integrate(lambda t: math.exp(-s * t) * f(t) if s * t < 745 else 0.0, 0.0, math.inf,
                     ctl, points=[split])


def cosine_transform(f: Real, kappa: float, ctl: QuadratureControl | None = None,
                     max_panels: int = 20000) -> EvalResult:
    """int_0^inf cos(kappa x) f(x) dx, panel by panel between zeros of cos."""
    ctl = _qctl(ctl)
    kappa = abs(float(kappa))
    if kappa == 0.0:
        return integrate(f, 0.0, math.inf, ctl)
    g = lambda x: math.cos(kappa * x) * f(x)
    h = math.pi / kappa
    edges = [0.0, 0.5 * h]
    total, err, small = 0.0, 0.0, 0
    while True:
        a, b = edges[-2], edges[-1]
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", spi.IntegrationWarning)
            v, e = spi.quad(g, a, b, epsabs=ctl.abs_tol / 10, epsrel=ctl.rel_tol, limit=ctl.max_subdivisions)
        total += v
        err += e
        small = small + 1 if abs(v) <= ctl.abs_tol + ctl.rel_tol * abs(total) else 0
        if small >= 3:
            break
        if len(edges) > max_panels:
            raise ConvergenceError("cosine transform did not settle; integrand decays too slowly")
        edges.append(b + h)
    return EvalResult(total, err + 4 * EPS * abs(total), Method.INTEGRAL)


# --------------------------------------------------------------------------
# Laplace-domain descriptors


@dataclass(frozen=True)
class LaplaceFamily:
    """coef * s^-mu * exp(-x s^nu), principal branches, 0 < nu < 1, x >= 0."""

    mu: float
    nu: float
    x: float = 0.0
    coef: float = 1.0

    def __post_init__(self):
        if not 0.0 < self.nu < 1.0 and self.x != 0.0:
            raise DomainError("exponent nu must lie in (0, 1)")
        if self.x < 0:
            raise DomainError("x must be >= 0")

    def __call__(self, s: complex) -> complex:
        s = complex(s)
        return self.coef * s ** (-self.mu) * cmath.exp(-self.x * s ** self.nu)

    def above_cut(self, r: float) -> complex:
        """Value at s = r e^{i pi}, i.e. just above the negative real axis."""
        if r == 0.0:
            return complex(0.0)
        w = self.x * r ** self.nu
        ph = -math.pi * self.mu + (-w * math.sin(math.pi * self.nu))
        mag = self.coef * r ** (-self.mu) * math.exp(-w * math.cos(math.pi * self.nu))
        return complex(mag * math.cos(ph), mag * math.sin(ph))

    def residue_at_zero(self) -> float:
        """Residue of the simple pole at s = 0, present only when mu = 1."""
        return self.coef if abs(self.mu - 1.0) < 1e-15 else 0.0

    def phase_rate(self) -> float:
        return self.x * abs(math.sin(math.pi * self.nu))

    def __mul__(self, c: float) -> "LaplaceFamily":
        return LaplaceFamily(self.mu, self.nu, self.x, self.coef * c)

    __rmul__ = __mul__

    def __add__(self, other) -> "LaplaceSum":
        return LaplaceSum((self,)) + other


@dataclass(frozen=True)
class LaplaceSum:
    """Finite linear combination of :class:`LaplaceFamily` terms."""

    terms: tuple[LaplaceFamily, ...]

    def __call__(self, s: complex) -> complex:
        return sum((t(s) for t in self.terms), complex(0.0))

    def above_cut(self, r: float) -> complex:
        return sum((t.above_cut(r) for t in self.terms), complex(0.0))

    def residue_at_zero(self) -> float:
        return sum(t.residue_at_zero() for t in self.terms)

    def phase_rate(self) -> float:
        return max((t.phase_rate() for t in self.terms), default=0.0)

    def __add__(self, other) -> "LaplaceSum":
        if isinstance(other, LaplaceFamily):
            return LaplaceSum(self.terms + (other,))
        if isinstance(other, LaplaceSum):
            return LaplaceSum(self.terms + other.terms)
        return NotImplemented

    def __mul__(self, c: float) -> "LaplaceSum":
        return LaplaceSum(tuple(t * c for t in self.terms))

    __rmul__ = __mul__


# --------------------------------------------------------------------------
# inverters


def bromwich_branchcut_invert(F_above_cut: Callable[[float], tuple[float, float] | complex],
                              poles_at_zero: float, t: float,
                              ctl: QuadratureControl | None = None,
                              phase_rate: float | None = None) -> EvalResult:
    """f(t) = residue - (1/pi) int_0^inf e^{-r t} Im F(r e^{i pi}) dr.

    ``F_above_cut`` returns F just above the negative axis, either as a
    complex number or a (re, im) pair. ``phase_rate`` (the coefficient of
    r^nu in the phase, if known) is used to warn about oscillation.
    """
    if not t > 0:
        raise DomainError(f"inversion time must be positive, got {t}")
    ctl = _qctl(ctl)

    def im_part(r):
        v = F_above_cut(r)
        return v.imag if isinstance(v, complex) else float(v[1])

    def g(r):
        if r * t > 745:
            return 0.0
        return math.exp(-r * t) * im_part(r)

    reach = 40.0 / t
    if phase_rate and phase_rate * reach ** 0.5 / (2 * math.pi) > 200:
        warnings.warn("branch-cut integrand oscillates faster than the quadrature resolves",
                      OscillationWarning, stacklevel=2)
    qctl = QuadratureControl(abs_tol=ctl.abs_tol, rel_tol=ctl.rel_tol,
                             max_subdivisions=max(ctl.max_subdivisions, 200))
    pieces = [0.0, min(1.0, reach), reach]
    total, err = 0.0, 0.0
    for a, b in zip(pieces[:-1], pieces[1:]):
        res = integrate(g, a, b, qctl)
        total += res.value
        err += res.err_est
    tail = integrate(g, reach, math.inf, qctl)
    total += tail.value
    err += tail.err_est
    v = poles_at_zero - total / math.pi
    return EvalResult(v, err / math.pi + 4 * EPS * abs(v), Method.INTEGRAL)


def invert_family(F: LaplaceFamily | LaplaceSum, t: float,
                  ctl: QuadratureControl | None = None) -> EvalResult:
    """Branch-cut inversion of a family descriptor."""
    return bromwich_branchcut_invert(F.above_cut, F.residue_at_zero(), t, ctl, F.phase_rate())


def _talbot(F: Callable[[complex], complex], t: float, m: int) -> float:
    r = 2.0 * m / (5.0 * t)
    acc = 0.5 * (F(complex(r)) * math.exp(r * t)).real
    for k in range(1, m):
        th = k * math.pi / m
        cot = math.cos(th) / math.sin(th)
        s = complex(r * th * cot, r * th)
        sigma = th + (th * cot - 1.0) * cot
        acc += (cmath.exp(t * s) * F(s) * complex(1.0, sigma)).real
    return r / m * acc


def talbot_invert(F: Callable[[complex], complex], t: float, n_nodes: int = 32) -> EvalResult:
    """Fixed Talbot inversion of F at t with ``n_nodes`` contour nodes.

    ``err_est`` is the change when the node count is halved. Doubling is
    useless in double precision (the contour amplifies round-off by
    e^{0.4 n}), so stability is judged from the n/4, n/2, n sequence: if the
    last step moved the value more than the previous one, an
    :class:`InstabilityWarning` is issued.
    """
    if not t > 0:
        raise DomainError(f"inversion time must be positive, got {t}")
    if n_nodes < 8:
        raise DomainError("Talbot inversion needs at least 8 nodes")
    try:
        f_m = _talbot(F, t, n_nodes)
        f_half = _talbot(F, t, n_nodes // 2)
        f_quarter = _talbot(F, t, n_nodes // 4)
    except OverflowError as exc:
        raise ConvergenceError("Talbot contour overflowed; transform grows too fast on the contour") from exc
    d_half = abs(f_m - f_half)
    d_quarter = abs(f_half - f_quarter)
    if d_half > d_quarter and d_half > 1e-8 * max(abs(f_m), 1.0):
        warnings.warn("Talbot node refinement diverges; result is round-off limited",
                      InstabilityWarning, stacklevel=2)
    return EvalResult(f_m, d_half + 10 * EPS * abs(f_m), Method.INTEGRAL)


# --------------------------------------------------------------------------
# convolution


class ConvMode(str, enum.Enum):
    SPACE = "space"
    TIME = "time"


def convolve(kernel: Real, data: SampledFunction, point: float, mode: ConvMode | str = ConvMode.SPACE,
             ctl: QuadratureControl | None = None, support_tol: float = 1e-8) -> EvalResult:
    """Convolution of a kernel with sampled data.

    SPACE: int kernel(point - xi) data(xi) dxi over the data support.
    TIME: int_0^point kernel(point - tau) data(tau) dtau (causal).
    """
    mode = ConvMode(mode)
    ctl = _qctl(ctl)
    if data.is_zero():
        return EvalResult(0.0, 0.0, Method.INTEGRAL)
    lo, hi = data.support
    xs = data.abscissae
    if mode is ConvMode.SPACE:
        a, b = lo, hi
        peak = max(abs(kernel(0.0)), abs(kernel(point - min(max(point, lo), hi))), 1e-300)
        for end, val in ((lo, data.values[0]), (hi, data.values[-1])):
            if val != 0.0 and abs(kernel(point - end)) > support_tol * peak:
                warnings.warn(f"data support [{lo}, {hi}] truncates the kernel at x={point}",
                              SupportTruncationWarning, stacklevel=2)
                break
        brk = [point]
    else:
        if point <= 0:
            raise DomainError("time convolution needs point > 0")
        if lo > 0.0 or hi < point:
            warnings.warn(f"data on [{lo}, {hi}] does not cover [0, {point}]",
                          SupportTruncationWarning, stacklevel=2)
        a, b = 0.0, point
        brk = []
    inner = [x for x in xs if a < x < b]
    if len(inner) <= 100:
        brk += inner
    g = lambda u: kernel(point - u) * data(u)
    qctl = QuadratureControl(ctl.abs_tol, ctl.rel_tol, max(ctl.max_subdivisions, 4 * len(brk) + 50))
    return integrate(g, a, b, qctl, points=brk)


__all__ = [
    "Interp", "SampledFunction", "integrate", "laplace_fwd", "cosine_transform",
    "LaplaceFamily", "LaplaceSum", "bromwich_branchcut_invert", "invert_family",
    "talbot_invert", "ConvMode", "convolve",
]
