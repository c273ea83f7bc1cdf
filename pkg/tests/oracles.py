"""High-precision reference values computed with mpmath, independent of wrightkit."""
from __future__ import annotations

import functools
import math

import mpmath as mp


def _series(lam: float, mu: float, z: float, dps: int, n_terms: int):
    with mp.workdps(dps):
        z_ = mp.mpf(z)
        lam_, mu_ = mp.mpf(lam), mp.mpf(mu)
        return mp.fsum(z_ ** k * mp.rgamma(k + 1) * mp.rgamma(lam_ * k + mu_) for k in range(n_terms))


@functools.lru_cache(maxsize=None)
def wright(lam: float, mu: float, z: float) -> float:
    """W_{lam,mu}(z) by its power series.

    The working precision is raised until two precisions 20 digits apart
    agree to 1e-18, so cancellation and tiny results are both handled.
    """
    if z == 0:
        return float(mp.rgamma(mu))
    # log of the largest term, and a cutoff where terms are below e^-800 (under the double range);
    # doubles are plenty for sizing
    peak, n = -math.inf, 0
    while True:
        if n > 20000 or peak > 250:
            raise OverflowError("series impractical at this argument")
        g = lam * n + mu
        if g <= 0 and g == int(g):
            n += 1  # 1/Gamma vanishes at the pole, the term says nothing
            continue
        t = n * math.log(abs(z)) - math.lgamma(n + 1) - math.lgamma(g)
        peak = max(peak, t)
        if n > 10 and t < min(peak, 0.0) - 800:
            break
        n += 1
    dps = int(30 + max(peak, 0.0) / math.log(10))
    prev = _series(lam, mu, z, dps, n)
    for _ in range(20):
        dps += 20
        cur = _series(lam, mu, z, dps, n)
        if abs(cur - prev) <= mp.mpf(10) ** -18 * abs(cur) or abs(cur) < mp.mpf(10) ** -330:
            return float(cur)
        prev = cur
    raise ArithmeticError(f"oracle did not settle for W_{{{lam},{mu}}}({z})")


@functools.lru_cache(maxsize=None)
def _m_integral(nu: float, x: float) -> float:
    # positive-integrand representation over [0, pi], in 50 digits
    with mp.workdps(50):
        nu_, x_ = mp.mpf(nu), mp.mpf(x)
        p = nu_ / (1 - nu_)
        y = x_ ** (1 / (1 - nu_))

        def c(phi):
            s = abs(mp.sin(phi))
            return mp.sin((1 - nu_) * phi) / s * abs(mp.sin(nu_ * phi) / s) ** p

        # the integrand peaks at phi = 0 with width about y^-1/2; refine there, panels elsewhere
        width = min(mp.pi / 2, 4 / mp.sqrt(y))
        pts = sorted(set(mp.linspace(0, mp.pi, 65)) | {width * mp.mpf(2) ** -k for k in range(10)})
        tiny = mp.mpf(10) ** -40
        v = mp.quad(lambda phi: c(max(phi, tiny)) * mp.exp(-c(max(phi, tiny)) * y), pts)
        return float(x_ ** p / ((1 - nu_) * mp.pi) * v)


def m_wright(nu: float, x: float) -> float:
    """M_nu(x): the series where practical, else the positive integral for x > 0."""
    try:
        return wright(-nu, 1.0 - nu, -x)
    except OverflowError:
        if x <= 0:
            raise
        return _m_integral(nu, x)


def f_wright(nu: float, z: float) -> float:
    try:
        return wright(-nu, 0.0, -z)
    except OverflowError:
        return nu * z * _m_integral(nu, z)


@functools.lru_cache(maxsize=None)
def mittag_leffler(alpha: float, beta: float, x: float) -> float:
    """E_{alpha,beta}(x) by its series; fine for the moderate |x| used in tests."""
    # terms peak near exp(|x|^(1/alpha)); carry enough digits to absorb the cancellation
    dps = 40 + int(abs(x) ** (1.0 / alpha) / math.log(10)) if x else 40
    if dps > 3000:
        raise OverflowError("series impractical at this argument")
    with mp.workdps(dps):
        x_ = mp.mpf(x)
        a_, b_ = mp.mpf(alpha), mp.mpf(beta)
        s, k, peak = mp.mpf(0), 0, mp.mpf(0)
        while True:
            # alpha k in double arithmetic would perturb the huge middle terms
            term = x_ ** k * mp.rgamma(a_ * k + b_)
            s += term
            peak = max(peak, abs(term))
            # partial sums can be huge before cancelling, so also demand the terms be far past their peak
            if k > 5 and abs(term) < mp.mpf(10) ** -40 * max(1, abs(s)) and abs(term) < mp.mpf(10) ** -60 * peak:
                return float(s)
            k += 1


def gamma(x: float) -> float:
    return float(mp.gamma(x))


@functools.lru_cache(maxsize=None)
def stable_density(alpha: float, theta: float, x: float) -> float:
    """Feller-parameterized stable density by inverting its characteristic function."""
    with mp.workdps(20):
        c = mp.cos(theta * mp.pi / 2)
        s = mp.sin(theta * mp.pi / 2)
        f = lambda k: mp.exp(-k ** alpha * c) * mp.cos(k * x + k ** alpha * s)
        # cut where the modulus is below 1e-25, panels about half an oscillation wide
        k_max = (58 / c) ** (1 / mp.mpf(alpha))
        n = int(min(4000, max(40, k_max * (abs(x) + abs(s) + 1) / 1.5)))
        v = mp.quad(f, mp.linspace(0, k_max, n + 1))
        return float(v / mp.pi)
