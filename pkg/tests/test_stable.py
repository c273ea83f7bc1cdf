import math

import numpy as np
import pytest
import scipy.stats as st

import oracles
from wrightkit import DomainError, PointMass, Smooth, stable_density, stable_pdf, stable_scaled, validate
from wrightkit.stable import cf_inversion, extremal_via_wright, feller_series, reciprocity_map, stable_mass


@pytest.mark.parametrize("alpha,theta", [(0.5, 0.6), (1.5, 0.6), (0.0, 0.0), (2.5, 0.0), (1.0, 1.2)])
def test_diamond(alpha, theta):
    with pytest.raises(DomainError):
        validate(alpha, theta)


def test_gaussian_and_cauchy():
    for x in (-2.0, 0.0, 1.5):
        assert stable_density(validate(2.0, 0.0), x).value == pytest.approx(st.norm.pdf(x, scale=math.sqrt(2)), rel=1e-14)
        assert stable_density(validate(1.0, 0.0), x).value == pytest.approx(st.cauchy.pdf(x), rel=1e-14)


def test_singular_case_is_point_mass():
    p = validate(1.0, -1.0)
    assert stable_pdf(p, 0.3) == PointMass(1.0, 1.0)
    assert stable_scaled(p, 0.0, 2.0) == PointMass(2.0, 1.0)
    with pytest.raises(DomainError):
        stable_density(p, 1.0)


@pytest.mark.parametrize("alpha,theta,x", [
    (0.5, -0.5, 0.7), (0.7, -0.7, 1.5), (0.8, 0.3, 2.0), (0.8, 0.3, -1.0), (1.3, -0.7, -1.5),
    (1.5, 0.0, 0.4), (1.5, 0.0, 12.0), (1.7, 0.2, -3.0), (1.2, -0.5, 2.0), (0.6, 0.0, 0.5),
])
def test_density_matches_oracle(alpha, theta, x):
    ref = oracles.stable_density(alpha, theta, x)
    assert stable_density(validate(alpha, theta), x).value == pytest.approx(ref, rel=1e-7, abs=1e-12)


def test_symmetric_with_scipy_levy_stable():
    # Feller theta=0 with unit scale matches scipy's S1 parameterization
    for a in (0.8, 1.6):
        for x in (0.2, 1.1):
            ref = st.levy_stable.pdf(x, a, 0.0)
            assert stable_density(validate(a, 0.0), x).value == pytest.approx(ref, rel=1e-5)


def test_extremal_bridge():
    for a in (0.4, 0.75):
        for x in (0.5, 2.0):
            s = feller_series(validate(a, -a), x)
            assert extremal_via_wright(a, x).value == pytest.approx(s.value, rel=1e-9)
    assert extremal_via_wright(0.4, -1.0).value == 0.0


def test_mirror_symmetry():
    p = validate(1.4, 0.3)
    for x in (0.5, 2.0):
        assert cf_inversion(p, -x).value == pytest.approx(stable_density(p.mirrored(), x).value, abs=1e-11)


def test_reciprocity_map():
    a, th = reciprocity_map(0.5, 0.0)
    assert a == 2.0
    validate(0.5, th)
    with pytest.raises(DomainError):
        reciprocity_map(1.5, 0.0)


def test_mass_and_scaling():
    assert stable_mass(validate(1.3, -0.2)).value == pytest.approx(1.0, abs=1e-6)
    p = validate(1.5, 0.2)
    v = stable_scaled(p, 0.8, 3.0)
    assert isinstance(v, Smooth)
    c = 3.0 ** (-1 / 1.5)
    assert v.value == pytest.approx(c * stable_density(p, 0.8 * c).value, rel=1e-14)
    with pytest.raises(DomainError):
        stable_scaled(p, 0.8, 0.0)


def test_heavy_tail_exponent():
    p = validate(1.5, 0.0)
    xs = np.array([20.0, 40.0])
    v = [stable_density(p, x).value for x in xs]
    slope = math.log(v[1] / v[0]) / math.log(2.0)
    assert slope == pytest.approx(-2.5, abs=0.05)
