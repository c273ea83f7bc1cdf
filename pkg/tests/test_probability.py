import math

import mpmath as mp
import pytest

import oracles
from wrightkit import DomainError, composition_check, m_abs_moment, m_char_fn, mvar_transform
from wrightkit.probability import m_abs_moment_quadrature, m_char_fn_quadrature, m_integer_moment_via_ml


@pytest.mark.parametrize("nu,d", [(0.0, 2.0), (0.3, 0.5), (0.5, 1.0), (0.8, 3.0), (0.6, -0.5)])
def test_moments_closed_form(nu, d):
    ref = float(mp.gamma(d + 1) / mp.gamma(nu * d + 1))
    assert m_abs_moment(nu, d) == pytest.approx(ref, rel=1e-14)


def test_moment_quadrature():
    assert m_abs_moment_quadrature(0.35, 1.5).value == pytest.approx(m_abs_moment(0.35, 1.5), rel=1e-7)


def test_integer_moments_two_paths():
    for n in range(6):
        assert m_integer_moment_via_ml(0.3, n) == pytest.approx(m_abs_moment(0.3, n), rel=1e-13)


def test_moment_domain():
    with pytest.raises(DomainError):
        m_abs_moment(0.5, -1.0)
    with pytest.raises(DomainError):
        m_abs_moment(1.0, 1.0)


def test_characteristic_function():
    for nu, k in ((0.3, 1.2), (0.8, 0.4)):
        ref = oracles.mittag_leffler(2 * nu, 1.0, -k * k)
        assert m_char_fn(nu, k) == pytest.approx(ref, rel=1e-10)
        assert m_char_fn_quadrature(nu, k).value == pytest.approx(ref, abs=1e-7)


def test_two_variable_transforms():
    nu, x, t = 0.4, 0.9, 2.0
    assert mvar_transform("T", nu, x, 1.5) == pytest.approx(1.5 ** (nu - 1) * math.exp(-x * 1.5 ** nu))
    assert mvar_transform("X", nu, t, 0.7) == pytest.approx(oracles.mittag_leffler(nu, 1.0, -0.7 * t ** nu), rel=1e-10)
    with pytest.raises(DomainError):
        mvar_transform("X", nu, 0.0, 0.7)


def test_composition():
    lhs, rhs = composition_check(0.5, 0.5, 1.0, 1.0)
    assert lhs == pytest.approx(oracles.m_wright(0.25, 1.0), rel=1e-10)
    assert rhs == pytest.approx(lhs, abs=1e-7)
    lhs, rhs = composition_check(0.4, 1.0, 0.7, 2.0)
    assert rhs == pytest.approx(lhs, rel=1e-12)
    with pytest.raises(DomainError):
        composition_check(1.0, 1.0, 0.5, 1.0)
