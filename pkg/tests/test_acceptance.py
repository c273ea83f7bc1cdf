"""The twelve acceptance criteria, each timed and checked against independent references.

Reference values come from scipy closed forms or from mpmath (tests/oracles.py)
and are computed before the clock starts, so the runtime limits apply to
wrightkit alone. Every test prints one PASS/FAIL line; the terminal summary
repeats them in order.
"""
import math

import mpmath as mp
import numpy as np
import pytest
import scipy.special as sps

import oracles
from wrightkit import (GreenSpec, LaplaceFamily, Problem, caputo_derivative, cosine_transform, green_cauchy,
                       green_signalling, invert_family, laplace_fwd, power_rule, reciprocity, rl_derivative,
                       rl_integral, stable_density, talbot_invert, three_sisters, validate, wright_f, wright_m)
from wrightkit.cli import main as cli_main
from wrightkit.probability import composition_check, m_abs_moment_quadrature
from wrightkit.stable import cf_inversion, extremal_via_wright, feller_series, reciprocity_map, stable_mass
from wrightkit.tables import read_csv
from wrightkit.tfdwe import three_sisters_laplace
from wrightkit.wright import m_asymptotic, m_series

# recorded fixture: the saddle-point form is compared from this reduced variable on
ASYMPTOTIC_Y0 = {0.25: 1.0, 0.75: 1.0}


def rel(a, b):
    return abs(a - b) / abs(b) if b != 0 else abs(a)


def gauss_m(x):
    return math.exp(-x * x / 4.0) / math.sqrt(math.pi)


def airy_m_third(x):
    return 3.0 ** (2.0 / 3.0) * sps.airy(x / 3.0 ** (1.0 / 3.0))[0]


def airy_m_two_thirds(x):
    # with mpmath Airy functions so the reference shares no code with scipy-based internals
    with mp.workdps(30):
        x = mp.mpf(x)
        arg = x * x / mp.mpf(3) ** (mp.mpf(4) / 3)
        v = mp.mpf(3) ** (-mp.mpf(2) / 3) * mp.exp(-2 * x ** 3 / 27) * (
            mp.mpf(3) ** (mp.mpf(1) / 3) * x * mp.airyai(arg) - 3 * mp.airyai(arg, derivative=1))
        return float(v)


def check(crit):
    print(crit.line())
    assert crit.passed, crit.line()


def test_01_closed_forms(criterion):
    c = criterion(1, "series M_nu vs Gaussian/Airy forms", 1.0, 1.0)
    cases = [(0.5, np.linspace(0, 5, 41), gauss_m, 1e-10),
             (1.0 / 3.0, np.linspace(0, 4, 41), airy_m_third, 1e-8),
             (2.0 / 3.0, np.linspace(0, 3, 41), airy_m_two_thirds, 1e-7)]
    refs = [[f(float(x)) for x in xs] for _, xs, f, _ in cases]
    for (nu, xs, _, tol), ref in zip(cases, refs):
        with c:
            got = [m_series(nu, float(x)).value for x in xs]
        for g, r in zip(got, ref):
            c.err(rel(g, r), tol)
    check(c)


def test_02_auxiliary_relation(criterion):
    c = criterion(2, "|F - nu z M| <= 1e-10 (1+|F|) on 9x17 grid", 1.0, 1e-10)
    nus = [round(0.1 * k, 10) for k in range(1, 10)]
    zs = [float(z) for z in np.linspace(0, 4, 17)]
    ref = {(nu, z): oracles.f_wright(nu, z) for nu in nus for z in zs}
    got = {}
    with c:
        for nu in nus:
            for z in zs:
                got[nu, z] = (wright_f(nu, z).value, nu * z * wright_m(nu, z).value)
    for k, (f, m) in got.items():
        scale = 1.0 + abs(ref[k])
        c.err(abs(f - m) / scale)
        c.err(abs(f - ref[k]) / scale)
        c.err(abs(m - ref[k]) / scale)
    check(c)


def test_03_laplace_pairs(criterion):
    c = criterion(3, "L[M_nu] = E_nu(-s); s^-mu exp(-s^nu) by both inverters", 30.0, 1e-6)
    nus = (0.25, 0.5, 0.75)
    ml = {(nu, s): oracles.mittag_leffler(nu, 1.0, -s) for nu in nus for s in (0.5, 1.0, 2.0)}
    combos = [(nu, mu) for nu in nus for mu in (0.0, nu, 1.0 - nu, 1.0)]
    assert len(combos) == 12
    w = {k: oracles.wright(-k[0], k[1], -1.0) for k in combos}
    with c:
        for (nu, s), r in ml.items():
            c.err(abs(laplace_fwd(lambda x, nu=nu: wright_m(nu, x).value, s).value - r))
        for (nu, mu), r in w.items():
            fam = LaplaceFamily(mu, nu, 1.0)
            c.err(abs(invert_family(fam, 1.0).value - r))
            c.err(abs(talbot_invert(fam, 1.0).value - r))
    check(c)


def test_04_three_sisters(criterion):
    c = criterion(4, "branch-cut inversions = erfc/Gaussian forms; Laplace relation table", 10.0, 1.0)
    ts = (0.25, 1.0, 4.0)

    def closed(a, t):
        g = math.exp(-a * a / (4 * t))
        return sps.erfc(a / (2 * math.sqrt(t))), a / (2 * math.sqrt(math.pi)) * t ** -1.5 * g, g / math.sqrt(math.pi * t)

    with c:
        for t in ts:
            phi, psi, chi = closed(1.0, t)
            for mu, ref in ((1.0, phi), (0.0, psi), (0.5, chi)):
                c.err(abs(invert_family(LaplaceFamily(mu, 0.5, 1.0), t).value - ref), 1e-7)
            got = three_sisters(1.0, t)
            for g, r in zip((got.phi, got.psi, got.chi), (phi, psi, chi)):
                c.err(abs(g.value - r), 1e-7)
        h = 1e-5
        for a in (0.5, 1.0, 2.0):
            for s in (0.5, 1.0, 2.0):
                phi, psi, chi = three_sisters_laplace(a, s)
                da = [(p - m) / (2 * h) for p, m in zip(three_sisters_laplace(a + h, s), three_sisters_laplace(a - h, s))]
                ds = [(p - m) / (2 * h) for p, m in zip(three_sisters_laplace(a, s + h), three_sisters_laplace(a, s - h))]
                for e in (phi - psi / s, psi - s * phi, phi + da[2] / s, psi + da[2], chi + da[0], chi + 2 / a * ds[1]):
                    c.err(abs(e), 1e-6)
    check(c)


def test_05_reciprocity(criterion):
    c = criterion(5, "2 nu x G_c = t G_s = F_nu on 3x3x3x2 grid; nu=1/2 Green functions", 1.0, 1.0)
    grid = [(nu, d, x, t) for nu in (0.25, 0.5, 0.75) for d in (1.0, 4.0) for x in (0.5, 1.0, 2.0)
            for t in (0.5, 1.0, 2.0)]
    ref = {g: oracles.f_wright(g[0], g[2] / math.sqrt(g[1]) * g[3] ** -g[0]) for g in grid}
    out = {}
    with c:
        for g in grid:
            out[g] = reciprocity(*g)
        halves = []
        for d in (1.0, 4.0):
            cs, ss = GreenSpec(Problem.CAUCHY, 0.5, d), GreenSpec(Problem.SIGNALLING, 0.5, d)
            for x in (0.5, 1.0, 2.0):
                for t in (0.5, 1.0, 2.0):
                    halves.append((d, x, t, green_cauchy(cs, x, t).value, green_signalling(ss, x, t).value))
    for g, (a, b, f) in out.items():
        c.err(max(abs(a - b), abs(a - f), abs(b - f)), 1e-10)
        c.err(abs(f - ref[g]), 1e-10)
    for d, x, t, gc, gs in halves:
        a = x / math.sqrt(d)
        e = math.exp(-a * a / (4 * t))
        c.err(rel(gc, e / (2 * math.sqrt(math.pi * d * t))), 1e-12)
        c.err(rel(gs, a / (2 * math.sqrt(math.pi)) * t ** -1.5 * e), 1e-12)
    check(c)


def test_06_moments(criterion):
    c = criterion(6, "absolute moments and normalization by quadrature", 20.0, 1.0)
    ref = {(nu, d): float(mp.gamma(d + 1) / mp.gamma(nu * d + 1)) for nu in (0.25, 0.5, 0.75)
           for d in (0.5, 1.0, 2.0, 3.0)}
    with c:
        for (nu, d), r in ref.items():
            c.err(rel(m_abs_moment_quadrature(nu, d).value, r), 1e-5)
        for k in range(1, 10):
            c.err(abs(m_abs_moment_quadrature(0.1 * k, 0.0).value - 1.0), 1e-6)
    check(c)


def test_07_characteristic_function(criterion):
    c = criterion(7, "cosine transform of M_nu = E_{2nu}(-k^2)", 10.0, 1e-5)
    ref = {(nu, k): oracles.mittag_leffler(2 * nu, 1.0, -k * k) for nu in (0.5, 0.75) for k in (0.5, 1.0, 2.0)}
    with c:
        for (nu, k), r in ref.items():
            c.err(abs(cosine_transform(lambda x, nu=nu: wright_m(nu, x).value, k).value - r))
    check(c)


def test_08_composition(criterion):
    c = criterion(8, "M_{1/4}(x,t) from M_{1/2} composed with M_{1/2}", 10.0, 1e-5)
    pts = [(x, t) for x in (0.5, 1.0, 2.0) for t in (0.5, 1.0, 2.0)]
    ref = {p: p[1] ** -0.25 * oracles.m_wright(0.25, p[0] * p[1] ** -0.25) for p in pts}
    with c:
        for p in pts:
            lhs, rhs = composition_check(0.5, 0.5, *p)
            c.err(abs(lhs - rhs))
            c.err(abs(rhs - ref[p]))
    check(c)


def levy_smirnov(x):
    return x ** -1.5 * math.exp(-1 / (4 * x)) / (2 * math.sqrt(math.pi))


def test_09_stable(criterion):
    c = criterion(9, "stable bridge, symmetry, reciprocity, normalization, unimodality", 30.0, 1.0)
    bridge_pts = [(a, x) for a in (0.3, 0.5, 0.75) for x in (0.5, 1.0, 2.0, 4.0)]
    bridge_pts += [(a, x) for a in (1.25, 1.5, 1.75) for x in (0.5, 1.0, 2.0)]
    sym = [((a, th), x) for a, th in ((0.75, 0.25), (1.5, 0.3), (1.2, -0.5), (0.5, 0.4), (1.8, 0.1))
           for x in (0.3, 1.0, 2.5, 6.0)]
    pairs = ((0.75, 0.25), (1.5, 0.3), (2.0, 0.0), (1.2, -0.5), (1.5, -0.5))
    xs = np.linspace(-10, 10, 400)
    skipped = 0
    with c:
        for a, x in bridge_pts:
            theta = -a if a < 1 else a - 2
            s = feller_series(validate(a, theta), x)
            if s.accuracy_loss:
                skipped += 1
                continue
            c.err(abs(extremal_via_wright(a, x).value - s.value), 1e-7)
        for (a, th), x in sym:
            p = validate(a, th)
            c.err(abs(cf_inversion(p, -x).value - stable_density(p.mirrored(), x).value), 1e-10)
        inv_alpha, theta_star = reciprocity_map(0.5, 0.0)
        p, q = validate(inv_alpha, 0.0), validate(0.5, theta_star)
        for x in np.linspace(0.1, 5, 25):
            c.err(abs(x ** -1.5 * stable_density(p, x ** -0.5).value - levy_smirnov(x)), 1e-8)
            c.err(abs(stable_density(q, x).value - levy_smirnov(x)), 1e-8)
        for a, th in pairs:
            c.err(abs(stable_mass(validate(a, th)).value - 1.0), 1e-5)
        for a, th in pairs:
            p = validate(a, th)
            d = np.sign(np.diff([stable_density(p, float(x)).value for x in xs]))
            d = d[d != 0]
            c.err(float(np.sum(d[1:] != d[:-1]) != 1), 1.0)
    if skipped:
        c.notes.append(f"{skipped} bridge points skipped where the Feller series flags cancellation")
    check(c)


def test_09b_stable_oracle():
    # independent of wrightkit's own series: mpmath characteristic-function inversion
    for a, th, x in ((0.5, -0.5, 1.0), (0.75, -0.75, 2.0), (1.5, -0.5, 0.5), (1.5, 0.3, -1.0), (1.2, -0.5, 2.0)):
        ref = oracles.stable_density(a, th, x)
        assert stable_density(validate(a, th), x).value == pytest.approx(ref, rel=1e-7, abs=1e-10)


def test_10_fractional(criterion):
    c = criterion(10, "power rules, quadrature operators, Caputo of constants, RL/Caputo bridge", 10.0, 1.0)
    gammas, alphas = (0.0, 0.5, 1.0, 2.0), (0.3, 0.5, 1.5)
    exact_j = {(a, g): float(mp.gamma(g + 1) / mp.gamma(g + 1 + a)) for a in alphas for g in gammas}
    exact_d = {(a, g): float(mp.gamma(g + 1) / mp.gamma(g + 1 - a)) for a in (0.3, 0.5) for g in (0.5, 1.0, 2.0)}
    exp_poly = lambda t: sum(t ** k / math.factorial(k) for k in range(12))
    d_exp = float(mp.fsum(mp.rgamma(k + 0.5) for k in range(12)))  # D^1/2 of t^k/k! at t=1
    with c:
        for (a, g), r in exact_j.items():
            c.err(rel(power_rule("J", a, g, 1.0), r), 1e-14)
            c.err(rel(rl_integral(lambda t, g=g: t ** g, a, 1.0, n_panels=512).value, r), 1e-6)
        for (a, g), r in exact_d.items():
            c.err(rel(power_rule("D", a, g, 1.0), r), 1e-14)
            dm = lambda t, g=g: g * t ** (g - 1)
            c.err(rel(rl_derivative(lambda t, g=g: t ** g, a, 1.0, dm=dm).value, r), 1e-6)
            c.err(rel(caputo_derivative(lambda t, g=g: t ** g, a, 1.0, dm=dm).value, r), 1e-6)
        for a in (0.3, 0.5, 0.9, 1.5):
            c.err(abs(caputo_derivative(lambda t: 1.0, a, 1.0).value), 1e-12)
        rl = rl_derivative(exp_poly, 0.5, 1.0).value
        cap = caputo_derivative(exp_poly, 0.5, 1.0).value
        c.err(abs(rl - d_exp), 1e-7)
        c.err(abs(rl - cap - 1 / math.sqrt(math.pi)), 1e-7)
    check(c)


def test_11_asymptotics(criterion):
    c = criterion(11, "saddle-point form exact at nu=1/2, within 10% for nu=1/4, 3/4", 5.0, 1.0)
    ys = {0.25: (1.0, 2.0, 4.0, 8.0, 16.0), 0.75: (1.0, 1.5, 2.0, 3.0, 4.0, 5.0)}
    ref = {(nu, y): oracles.m_wright(nu, y / nu) for nu, yy in ys.items() for y in yy if y >= ASYMPTOTIC_Y0[nu]}
    with c:
        for y in (0.1, 0.5, 1.0, 2.0, 5.0):
            c.err(rel(m_asymptotic(0.5, y).value, gauss_m(y / 0.5)), 1e-13)
        for (nu, y), r in ref.items():
            c.err(abs(m_asymptotic(nu, y).value / r - 1.0), 0.1)
    c.notes.append(f"y0 = {ASYMPTOTIC_Y0}")
    check(c)


def test_12_figures(criterion, tmp_path, capsys):
    c = criterion(12, "figures 1..9 tables satisfy their shape invariants", 30.0, 1.0)
    with c:
        assert cli_main(["figures", "all", "--out", str(tmp_path)]) == 0
    capsys.readouterr()
    problems = []
    for k in range(1, 10):
        t = read_csv((tmp_path / f"figure_{k}.csv").read_text())
        by = {}
        for r in t.sorted_rows():
            by.setdefault(r.series, []).append(r.value)
        if not by:
            problems.append(f"figure {k} is empty")
        if k in (1, 2, 3, 4, 5, 6):
            for lab, v in by.items():
                if min(v) < 0:
                    problems.append(f"figure {k} {lab} negative")
        if k == 4:
            d = np.sign(np.diff(by[next(iter(by))]))
            d = d[d != 0]
            if np.sum(d[1:] != d[:-1]) != 1:
                problems.append("figure 4 not unimodal")
        if k == 8 and not np.all(np.diff(by["vs_t:phi"]) > 0):
            problems.append("figure 8 step response not increasing")
        for lab, v in by.items():
            if not all(math.isfinite(x) for x in v):
                problems.append(f"figure {k} {lab} non-finite")
    c.err(float(len(problems)))
    c.notes.extend(problems)
    check(c)
