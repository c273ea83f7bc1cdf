"""Identity suites: every transform pair, reciprocity relation and moment
identity the package relies on, checked numerically.

Each suite returns a list of :class:`Check` records holding the largest
error seen and the tolerance it was held to. References are independent
where possible: closed forms, scipy's Airy functions, a second inversion
method, or the power rules of fractional calculus.
"""
from __future__ import annotations

import math
import time
import warnings
from dataclasses import asdict, dataclass
from typing import Callable, Iterable

import numpy as np
from scipy import special as sps

from .errors import WrightkitError
from .figures import check_figure, figure_table, sign_changes
from .fractional import caputo_derivative, power_rule, rl_derivative, rl_integral
from .probability import (composition_check, m_abs_moment, m_abs_moment_quadrature, m_char_fn,
                          m_char_fn_quadrature, m_integer_moment_via_ml)
from .special import gamma, mittag_leffler, rgamma
from .stable import (cf_inversion, extremal_via_wright, feller_series, reciprocity_map, stable_density, stable_mass,
                     stable_scaled, validate)
from .tfdwe import (GreenSpec, Problem, green_cauchy, green_signalling, reciprocity, three_sisters,
                    three_sisters_laplace)
from .transforms import LaplaceFamily, integrate, invert_family, laplace_fwd, talbot_invert
from .wright import (WrightParams, lk_kernel, m_asymptotic, m_lk_integral, m_series, m_symmetric_pdf,
                     wright_m, wright_second_kind, wright_w)


@dataclass
class Check:
    suite: str
    name: str
    max_err: float
    tol: float
    passed: bool
    seconds: float
    note: str = ""

    def line(self) -> str:
        tag = "PASS" if self.passed else "FAIL"
        s = f"{tag} {self.suite}/{self.name}: max_err={self.max_err:.3e} tol={self.tol:.1e} ({self.seconds:.2f}s)"
        return s + (f" [{self.note}]" if self.note else "")


def _measure(suite: str, name: str, tol: float, errors: Callable[[], Iterable[float]], note: str = "") -> Check:
    t0 = time.perf_counter()
    try:
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            errs = [float(e) for e in errors()]
        worst = max(errs) if errs else 0.0
        if math.isnan(worst) or any(math.isnan(e) for e in errs):
            worst = math.inf
    except (WrightkitError, ArithmeticError, ValueError) as exc:
        worst, note = math.inf, f"{type(exc).__name__}: {exc}"
    dt = time.perf_counter() - t0
    return Check(suite, name, worst, tol, worst <= tol, dt, note)


def _rel(a: float, b: float) -> float:
    return abs(a - b) / abs(b) if b != 0 else abs(a)


# ----------------------------------------------------------------------
# M-Wright closed forms and the F relation


def _m_closed_reference(nu: float, x: float) -> float:
    # written out here against scipy's Airy functions, not the package's own
    if nu == 0.5:
        return math.exp(-x * x / 4.0) / math.sqrt(math.pi)
    if nu == 1.0 / 3.0:
        return 3.0 ** (2.0 / 3.0) * sps.airy(x / 3.0 ** (1.0 / 3.0))[0]
    ai, aip, _, _ = sps.airy(x * x / 3.0 ** (4.0 / 3.0))
    return 3.0 ** (-2.0 / 3.0) * math.exp(-2.0 * x ** 3 / 27.0) * (3.0 ** (1.0 / 3.0) * x * ai - 3.0 * aip)


CLOSED_FORM_CASES = ((0.5, 5.0, 1e-10), (1.0 / 3.0, 4.0, 1e-8), (2.0 / 3.0, 3.0, 1e-7))


def suite_closed_forms() -> list[Check]:
    out = []
    for nu, xmax, tol in CLOSED_FORM_CASES:
        xs = np.linspace(0.0, xmax, 41)
        out.append(_measure("closed-forms", f"series nu={nu:.4g} x in [0,{xmax:g}]", tol,
                            lambda nu=nu, xs=xs: (_rel(m_series(nu, x).value, _m_closed_reference(nu, x))
                                                  for x in xs)))
    return out


NU_GRID = tuple(round(0.1 * k, 10) for k in range(1, 10))
Z_GRID = tuple(np.linspace(0.0, 4.0, 17))


def f_reference(nu: float, z: float) -> float:
    """F_nu(z) without going through M_nu.

    Order of preference: the F series while its cancellation guard holds;
    inversion of exp(-z s^nu) at t = 1 along the branch cut while the cut
    integrand stays below about e^9; otherwise the saddle-point form, which
    only occurs where F is far below the comparison tolerance.
    """
    if z == 0.0:
        return 0.0
    r = wright_w(WrightParams(-nu, 0.0), -z)
    if not r.accuracy_loss:
        return r.value
    c = math.cos(math.pi * nu)
    growth = (nu * z * abs(c)) ** (1.0 / (1.0 - nu)) * (1.0 - nu) / nu
    if c >= 0.0 or growth < 9.0:
        return invert_family(LaplaceFamily(0.0, nu, z), 1.0).value
    return nu * z * m_asymptotic(nu, nu * z).value


def suite_auxiliary() -> list[Check]:
    def errs():
        for nu in NU_GRID:
            for z in Z_GRID:
                f = f_reference(nu, float(z))
                yield abs(f - nu * z * wright_m(nu, float(z)).value) / (1.0 + abs(f))
    return [_measure("auxiliary", "F = nu z M on 9x17 grid", 1e-10, errs)]


# ----------------------------------------------------------------------
# Laplace pairs


SISTER_NU = (0.25, 0.5, 0.75)


def suite_laplace_pairs() -> list[Check]:
    out = []

    def m_pair():
        for nu in SISTER_NU:
            for s in (0.5, 1.0, 2.0):
                lt = laplace_fwd(lambda r, nu=nu: wright_m(nu, r).value, s).value
                yield abs(lt - mittag_leffler(nu, 1.0, -s).value)
    out.append(_measure("laplace-pairs", "L[M_nu](s) = E_nu(-s)", 1e-6, m_pair))

    def second_kind_pair():
        for nu, mu in ((0.5, 0.5), (0.25, 0.75)):
            for s in (0.5, 1.0, 2.0):
                lt = laplace_fwd(lambda r: wright_second_kind(nu, mu, r).value, s).value
                yield abs(lt - mittag_leffler(nu, mu + nu, -s).value)
    out.append(_measure("laplace-pairs", "L[W_{-nu,mu}(-r)] = E_{nu,mu+nu}(-s)", 1e-6, second_kind_pair))

    def first_kind_pair():
        for lam in (0.0, 1.0):
            for mu in (0.5, 1.0):
                for s in (1.0, 2.0):
                    lt = laplace_fwd(lambda r: wright_w(WrightParams(lam, mu), -r).value, s).value
                    yield abs(lt - mittag_leffler(lam, mu, -1.0 / s).value / s) if lam > 0 else \
                        abs(lt - rgamma(mu) / (s + 1.0))
    out.append(_measure("laplace-pairs", "L[W_{lam,mu}(-r)] = E_{lam,mu}(-1/s)/s", 1e-6, first_kind_pair,
                        note="lam=0 uses E_{0,mu}(x) = 1/(Gamma(mu)(1-x))"))

    def stankovic(inverter):
        def errs():
            for nu in SISTER_NU:
                for mu in (0.0, nu, 1.0 - nu, 1.0):
                    fam = LaplaceFamily(mu, nu, 1.0)
                    yield abs(inverter(fam) - wright_second_kind(nu, mu, 1.0).value)
        return errs
    out.append(_measure("laplace-pairs", "s^-mu exp(-s^nu) by branch cut (12 cases)", 1e-6,
                        stankovic(lambda f: invert_family(f, 1.0).value)))
    out.append(_measure("laplace-pairs", "s^-mu exp(-s^nu) by Talbot (12 cases)", 1e-6,
                        stankovic(lambda f: talbot_invert(f, 1.0).value)))
    return out


# ----------------------------------------------------------------------
# three sisters


def _sisters_closed(a: float, t: float) -> tuple[float, float, float]:
    g = math.exp(-a * a / (4.0 * t))
    return (sps.erfc(a / (2.0 * math.sqrt(t))), a / (2.0 * math.sqrt(math.pi)) * t ** -1.5 * g,
            g / math.sqrt(math.pi * t))


def suite_three_sisters() -> list[Check]:
    def inversion():
        for t in (0.25, 1.0, 4.0):
            phi, psi, chi = _sisters_closed(1.0, t)
            yield abs(invert_family(LaplaceFamily(1.0, 0.5, 1.0), t).value - phi)
            yield abs(invert_family(LaplaceFamily(0.0, 0.5, 1.0), t).value - psi)
            yield abs(invert_family(LaplaceFamily(0.5, 0.5, 1.0), t).value - chi)

    def closed():
        for t in (0.25, 1.0, 4.0):
            ref = _sisters_closed(1.0, t)
            got = three_sisters(1.0, t)
            yield from (abs(g.value - r) for g, r in zip((got.phi, got.psi, got.chi), ref))

    def table():
        h = 1e-5
        for a in (0.5, 1.0, 2.0):
            for s in (0.5, 1.0, 2.0):
                phi, psi, chi = three_sisters_laplace(a, s)
                d_a = lambda k: (three_sisters_laplace(a + h, s)[k] - three_sisters_laplace(a - h, s)[k]) / (2 * h)
                d_s = lambda k: (three_sisters_laplace(a, s + h)[k] - three_sisters_laplace(a, s - h)[k]) / (2 * h)
                yield abs(phi - psi / s)
                yield abs(phi + d_a(2) / s)
                yield abs(psi - s * phi)
                yield abs(psi + d_a(2))
                yield abs(chi + d_a(0))
                yield abs(chi + 2.0 / a * d_s(1))

    return [
        _measure("three-sisters", "branch-cut inversion vs erfc/Gaussian forms", 1e-7, inversion),
        _measure("three-sisters", "three_sisters closed forms", 1e-12, closed),
        _measure("three-sisters", "Laplace-domain relation table by differences", 1e-6, table),
    ]


# ----------------------------------------------------------------------
# diffusion-wave Green functions


def suite_reciprocity() -> list[Check]:
    def triple():
        for nu in SISTER_NU:
            for x in (0.5, 1.0, 2.0):
                for t in (0.5, 1.0, 2.0):
                    for d in (1.0, 4.0):
                        a, b, c = reciprocity(nu, d, x, t)
                        yield max(abs(a - b), abs(a - c), abs(b - c))

    def half():
        for d in (1.0, 4.0):
            spec = GreenSpec(Problem.CAUCHY, 0.5, d)
            for x in (0.5, 1.0, 2.0):
                for t in (0.5, 1.0, 2.0):
                    a = x / math.sqrt(d)
                    _, psi, chi = _sisters_closed(a, t)
                    yield _rel(green_cauchy(spec, x, t).value, chi / (2.0 * math.sqrt(d)))
                    yield _rel(green_signalling(spec.with_problem(Problem.SIGNALLING), x, t).value, psi)
    return [
        _measure("reciprocity", "2 nu x G_c = t G_s = F_nu(z) on 3x3x3x2 grid", 1e-10, triple),
        _measure("reciprocity", "nu=1/2 Green functions vs diffusion forms", 1e-12, half),
    ]


CONTINUITY_C = 2.0


def suite_green() -> list[Check]:
    def even():
        for nu in (0.3, 0.75):
            spec = GreenSpec(Problem.CAUCHY, nu, 2.0)
            for x in (0.3, 1.0, 2.5):
                yield abs(green_cauchy(spec, x, 1.0).value - green_cauchy(spec, -x, 1.0).value)

    def signalling_nonneg():
        for nu in (0.25, 0.5, 0.75, 0.9):
            spec = GreenSpec(Problem.SIGNALLING, nu)
            for x in (0.0, 0.5, 2.0):
                for t in (0.1, 1.0, 5.0):
                    yield max(0.0, -green_signalling(spec, x, t).value)

    def mass():
        for nu in (0.25, 0.75):
            for d in (1.0, 4.0):
                spec = GreenSpec(Problem.CAUCHY, nu, d)
                for t in (0.5, 2.0):
                    m = integrate(lambda x: green_cauchy(spec, x, t).value, 0.0, math.inf).value
                    yield abs(2.0 * m - 1.0)

    def continuity():
        for x in (0.0, 0.5, 1.0, 2.0):
            lo = green_cauchy(GreenSpec(Problem.CAUCHY, 0.49), x, 1.0).value
            hi = green_cauchy(GreenSpec(Problem.CAUCHY, 0.51), x, 1.0).value
            yield abs(hi - lo) / 0.01

    def step():
        for nu in (0.3, 0.6):
            spec = GreenSpec(Problem.SIGNALLING, nu)
            for x, t in ((1.0, 1.0), (0.5, 2.0)):
                cum = integrate(lambda tau: green_signalling(spec, x, tau).value if tau > 0 else 0.0,
                                0.0, t).value
                yield abs(cum - wright_second_kind(nu, 1.0, x * t ** -nu).value)

    return [
        _measure("green", "G_c even in x", 1e-15, even),
        _measure("green", "G_s >= 0", 0.0, signalling_nonneg),
        _measure("green", "unit mass of G_c", 1e-6, mass),
        _measure("green", f"|dG_c/dnu| near nu=1/2 below C={CONTINUITY_C:g}", CONTINUITY_C, continuity),
        _measure("green", "int_0^t G_s = W_{-nu,1}(-x t^-nu)", 1e-6, step),
    ]


# ----------------------------------------------------------------------
# M-Wright invariants


def suite_wright() -> list[Check]:
    def nonneg():
        for nu in (0.05, 0.2, 0.4, 0.6, 0.8, 0.95):
            for x in np.linspace(0.0, 10.0, 41):
                yield max(0.0, -wright_m(nu, float(x)).value)

    def branches():
        for nu in (0.5, 1.0 / 3.0, 2.0 / 3.0):
            for x in (0.5, 1.0, 2.0):
                cf = _m_closed_reference(nu, x)
                yield abs(m_series(nu, x).value - cf)
                yield abs(m_lk_integral(nu, x).value - cf)
        for nu in (0.2, 0.4, 0.7):
            for x in (0.5, 1.0, 2.0):
                yield abs(m_series(nu, x).value - m_lk_integral(nu, x).value)

    def concentration():
        mass = 2.0 * integrate(lambda x: m_symmetric_pdf(0.95, x).value, 0.8, 1.2).value
        yield max(0.0, 0.9 - mass)

    return [
        _measure("wright", "M_nu >= 0 on [0, 10]", 0.0, nonneg),
        _measure("wright", "series, integral and closed forms agree", 1e-8, branches),
        _measure("wright", "nu=0.95: mass within 0.2 of +-1 exceeds 0.9", 0.0, concentration,
                 note="shortfall below 0.9"),
    ]


# ----------------------------------------------------------------------
# moments, characteristic function, composition


def suite_moments() -> list[Check]:
    def quad():
        for nu in (0.25, 0.5, 0.75):
            for d in (0.5, 1.0, 2.0, 3.0):
                yield _rel(m_abs_moment_quadrature(nu, d).value, m_abs_moment(nu, d))

    def norm():
        for nu in NU_GRID:
            yield abs(m_abs_moment_quadrature(nu, 0.0).value - 1.0)

    def two_paths():
        for nu in (0.0, 0.25, 0.5, 0.75):
            for n in range(7):
                yield _rel(m_integer_moment_via_ml(nu, n), m_abs_moment(nu, n))

    def t_independent():
        for nu in (0.3, 0.7):
            for t in (0.5, 1.0, 4.0):
                s = t ** -nu
                m = integrate(lambda x: s * wright_m(nu, x * s).value, 0.0, math.inf).value
                yield abs(m - 1.0)

    return [
        _measure("moments", "int x^d M_nu = Gamma(d+1)/Gamma(nu d+1)", 1e-5, quad),
        _measure("moments", "int M_nu = 1 for nu = 0.1..0.9", 1e-6, norm),
        _measure("moments", "integer moments by Gamma ratio and by E_nu", 1e-14, two_paths),
        _measure("moments", "mass of M_nu(x, t) independent of t", 1e-6, t_independent),
    ]


def suite_char_fn() -> list[Check]:
    def cos_t():
        for nu in (0.5, 0.75):
            for k in (0.5, 1.0, 2.0):
                yield abs(m_char_fn_quadrature(nu, k).value - m_char_fn(nu, k))

    def shape():
        for nu in (0.3, 0.5, 0.8):
            yield abs(m_char_fn(nu, 0.0) - 1.0)
            for k in (0.1, 0.7, 1.5, 3.0):
                v = m_char_fn(nu, k)
                yield abs(v - m_char_fn(nu, -k))
                yield max(0.0, abs(v) - 1.0)

    return [
        _measure("char-fn", "cosine transform of M_nu = E_{2nu}(-k^2)", 1e-5, cos_t),
        _measure("char-fn", "even, bounded by 1, equal to 1 at 0", 1e-15, shape),
    ]


def suite_composition() -> list[Check]:
    def errs():
        for x in (0.5, 1.0, 2.0):
            for t in (0.5, 1.0, 2.0):
                lhs, rhs = composition_check(0.5, 0.5, x, t)
                yield abs(lhs - rhs)
    return [_measure("composition", "M_{1/4} from M_{1/2} composed with M_{1/2}", 1e-5, errs)]


# ----------------------------------------------------------------------
# stable densities


UNIMODAL_PAIRS = ((0.75, 0.25), (1.5, 0.3), (2.0, 0.0), (1.2, -0.5), (1.5, -0.5))
NORMALIZATION_PAIRS = ((0.75, 0.25), (1.5, 0.3), (2.0, 0.0))


def _levy_smirnov(x: float) -> float:
    return x ** -1.5 * math.exp(-1.0 / (4.0 * x)) / (2.0 * math.sqrt(math.pi))


def suite_stable() -> list[Check]:
    def bridge():
        for a in (0.3, 0.5, 0.75):
            p = validate(a, -a)
            for x in (0.5, 1.0, 2.0, 4.0):
                s = feller_series(p, x)
                if not s.accuracy_loss:
                    yield abs(extremal_via_wright(a, x).value - s.value)
        for a in (1.25, 1.5, 1.75):
            p = validate(a, a - 2.0)
            for x in (0.5, 1.0, 2.0):
                s = feller_series(p, x)
                if not s.accuracy_loss:
                    yield abs(extremal_via_wright(a, x).value - s.value)

    def symmetry():
        for a, th in ((0.75, 0.25), (1.5, 0.3), (1.2, -0.5), (0.5, 0.4), (1.8, 0.1)):
            p = validate(a, th)
            for x in (0.3, 1.0, 2.5, 6.0):
                # the left side by direct inversion, since stable_density itself mirrors
                yield abs(cf_inversion(p, -x).value - stable_density(p.mirrored(), x).value)

    def recip():
        # x^-(a+1) L_{1/a}^theta(x^-a) = L_a^{theta*}(x) with a = 1/2, theta = 0
        inv_alpha, theta_star = reciprocity_map(0.5, 0.0)
        p, q = validate(inv_alpha, 0.0), validate(0.5, theta_star)
        for x in np.linspace(0.1, 5.0, 25):
            lhs = x ** -1.5 * stable_density(p, x ** -0.5).value
            yield abs(lhs - _levy_smirnov(x))
            yield abs(stable_density(q, x).value - _levy_smirnov(x))

    def norm():
        for a, th in NORMALIZATION_PAIRS:
            yield abs(stable_mass(validate(a, th)).value - 1.0)

    def unimodal():
        xs = np.linspace(-10.0, 10.0, 400)
        for a, th in UNIMODAL_PAIRS:
            p = validate(a, th)
            yield abs(sign_changes([stable_density(p, float(x)).value for x in xs]) - 1)

    def tail():
        p = validate(1.5, 0.0)
        r = [stable_density(p, x).value * x ** 2.5 for x in np.linspace(10.0, 30.0, 11)]
        yield max(r) / min(r)

    def divisible():
        p = validate(1.5, 0.0)
        half = lambda y: stable_scaled(p, y, 0.5).value
        for x in (0.0, 0.7, 2.0):
            g = lambda y: half(y) * half(x - y)
            lo, hi = min(0.0, x), max(0.0, x)
            conv = (integrate(g, lo, hi).value if hi > lo else 0.0)
            conv += integrate(g, hi, math.inf, points=[hi + 1.0]).value
            conv += integrate(lambda u: g(-u), -lo, math.inf, points=[-lo + 1.0]).value
            yield abs(conv - stable_density(p, x).value)

    return [
        _measure("stable", "extremal M-Wright bridge vs Feller series", 1e-7, bridge),
        _measure("stable", "L^theta(-x) = L^-theta(x)", 1e-10, symmetry),
        _measure("stable", "reciprocity (1/2, 0) gives Levy-Smirnov", 1e-8, recip),
        _measure("stable", "normalization", 1e-5, norm),
        _measure("stable", "unimodality on 400-point grid (5 pairs)", 0.0, unimodal),
        _measure("stable", "x^2.5 L(x) within factor 2 on [10, 30]", 2.0, tail),
        _measure("stable", "two-fold self-convolution", 1e-4, divisible),
    ]


# ----------------------------------------------------------------------
# fractional operators


POWER_GAMMAS = (0.0, 0.5, 1.0, 2.0)
POWER_ALPHAS = (0.3, 0.5, 1.5)


def _exp_poly(t, n=12):
    return sum(t ** k / math.factorial(k) for k in range(n))


def suite_fractional() -> list[Check]:
    def left_inverse():
        for g in POWER_GAMMAS:
            for a in POWER_ALPHAS:
                yield abs(power_rule("J", a, g, 1.0) * power_rule("D", a, g + a, 1.0) - 1.0)

    def integral_quad():
        for g in POWER_GAMMAS:
            for a in POWER_ALPHAS:
                yield _rel(rl_integral(lambda t, g=g: t ** g, a, 1.0).value, power_rule("J", a, g, 1.0))

    def derivative_quad():
        for g in (0.5, 1.0, 2.0):
            for a in (0.3, 0.5):
                ref = power_rule("D", a, g, 1.0)
                dm = lambda t, g=g: g * t ** (g - 1.0)
                yield _rel(rl_derivative(lambda t, g=g: t ** g, a, 1.0, dm=dm).value, ref)
                yield _rel(caputo_derivative(lambda t, g=g: t ** g, a, 1.0, dm=dm).value, ref)
        yield _rel(rl_derivative(lambda t: t ** 2, 1.5, 1.0, init=[0.0, 0.0]).value, power_rule("D", 1.5, 2.0, 1.0))

    def constant():
        for a in (0.3, 0.5, 0.9, 1.5):
            yield abs(caputo_derivative(lambda t: 1.0, a, 1.0).value)

    def taylor():
        yield abs(caputo_derivative(lambda t: 2.0 + 3.0 * t, 1.5, 1.0).value)

    def bridge():
        exact = sum(rgamma(k + 0.5) for k in range(12))  # D^0.5 t^k/k! at t = 1
        yield abs(rl_derivative(_exp_poly, 0.5, 1.0).value - exact)
        yield abs(rl_derivative(_exp_poly, 0.5, 1.0, method="definition").value - exact)
        cap = caputo_derivative(_exp_poly, 0.5, 1.0).value
        yield abs(rl_derivative(_exp_poly, 0.5, 1.0).value - cap - rgamma(0.5))

    return [
        _measure("fractional", "D^a J^a t^g = t^g by power rules", 4e-15, left_inverse),
        _measure("fractional", "J^a t^g by product quadrature", 1e-6, integral_quad),
        _measure("fractional", "D^a t^g by quadrature (RL and Caputo)", 1e-6, derivative_quad),
        _measure("fractional", "Caputo derivative of a constant", 1e-12, constant),
        _measure("fractional", "Caputo kills 2 + 3t at a=1.5", 1e-8, taylor),
        _measure("fractional", "RL = Caputo + t^-a f(0)/Gamma(1-a)", 1e-7, bridge),
    ]


# ----------------------------------------------------------------------
# saddle-point asymptotics


ASYMPTOTIC_Y0 = {0.25: 1.0, 0.75: 1.0}
ASYMPTOTIC_Y = {0.25: (1.0, 2.0, 4.0, 8.0, 16.0), 0.75: (1.0, 1.5, 2.0, 3.0, 4.0, 5.0)}


def suite_asymptotics() -> list[Check]:
    def exact_half():
        for y in (0.1, 0.5, 1.0, 2.0, 5.0):
            yield _rel(m_asymptotic(0.5, y).value, _m_closed_reference(0.5, y / 0.5))

    def ratio():
        for nu, ys in ASYMPTOTIC_Y.items():
            for y in ys:
                if y >= ASYMPTOTIC_Y0[nu]:
                    yield abs(m_asymptotic(nu, y).value / m_lk_integral(nu, y / nu).value - 1.0)

    return [
        _measure("asymptotics", "saddle-point form exact at nu=1/2", 1e-13, exact_half),
        _measure("asymptotics", "ratio to integral within 10% for y >= y0", 0.1, ratio,
                 note=f"y0={ASYMPTOTIC_Y0}"),
    ]


# ----------------------------------------------------------------------
# figures and scalar functions


def suite_figures() -> list[Check]:
    out = []
    for k in range(1, 10):
        out.append(_measure("figures", f"figure {k} shape", 0.0,
                            lambda k=k: [len(check_figure(figure_table(k), k))]))
    return out


def suite_special() -> list[Check]:
    def gamma_pair():
        for x in np.linspace(-9.75, 30.3, 57):
            g = gamma(float(x)).value
            yield abs(g * rgamma(float(x)) - 1.0)

    def ml_exp():
        for x in np.linspace(-20.0, 20.0, 41):
            yield _rel(mittag_leffler(1.0, 1.0, float(x)).value, math.exp(x))
        for a, b in ((0.5, 1.0), (0.5, 0.5), (1.5, 2.0), (0.8, 1.3)):
            yield _rel(mittag_leffler(a, b, 0.0).value, rgamma(b))
        for x in np.linspace(-5.0, 5.0, 21):
            yield _rel(mittag_leffler(0.5, 1.0, float(x)).value, float(sps.erfcx(-x)))

    def kernel():
        for nu in (0.2, 0.5, 0.8):
            yield abs(lk_kernel(nu, 1e-9) - lk_kernel(nu, 0.0))

    return [
        _measure("special", "gamma * rgamma = 1", 1e-15, gamma_pair),
        _measure("special", "Mittag-Leffler special values", 1e-12, ml_exp),
        _measure("special", "integral kernel continuous at 0", 1e-8, kernel),
    ]


SUITES: dict[str, Callable[[], list[Check]]] = {
    "closed-forms": suite_closed_forms,
    "auxiliary": suite_auxiliary,
    "laplace-pairs": suite_laplace_pairs,
    "three-sisters": suite_three_sisters,
    "reciprocity": suite_reciprocity,
    "moments": suite_moments,
    "char-fn": suite_char_fn,
    "composition": suite_composition,
    "stable": suite_stable,
    "fractional": suite_fractional,
    "asymptotics": suite_asymptotics,
    "figures": suite_figures,
    "green": suite_green,
    "wright": suite_wright,
    "special": suite_special,
}

# acceptance criterion number -> suite
ACCEPTANCE = {
    1: "closed-forms", 2: "auxiliary", 3: "laplace-pairs", 4: "three-sisters", 5: "reciprocity",
    6: "moments", 7: "char-fn", 8: "composition", 9: "stable", 10: "fractional", 11: "asymptotics",
    12: "figures",
}


def run(suites: Iterable[str] | str = "all") -> list[Check]:
    names = list(SUITES) if suites == "all" else ([suites] if isinstance(suites, str) else list(suites))
    unknown = [n for n in names if n not in SUITES]
    if unknown:
        raise KeyError(f"unknown suite(s) {unknown}; choose from {sorted(SUITES)} or all")
    out = []
    for n in names:
        out.extend(SUITES[n]())
    return out


def report(checks: list[Check]) -> dict:
    return {
        "passed": all(c.passed for c in checks),
        "n_checks": len(checks),
        "n_failed": sum(not c.passed for c in checks),
        "checks": [{k: (v if not (isinstance(v, float) and not math.isfinite(v)) else repr(v))
                    for k, v in asdict(c).items()} for c in checks],
    }


__all__ = ["Check", "SUITES", "ACCEPTANCE", "run", "report", "f_reference", "ASYMPTOTIC_Y0"]
