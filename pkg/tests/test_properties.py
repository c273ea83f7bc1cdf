"""Property-based checks of structural invariants."""
import math

from hypothesis import given, settings, strategies as st

from wrightkit import (GreenSpec, Problem, gamma, green_cauchy, mittag_leffler, rgamma, stable_density, validate,
                       wright_m)

finite_x = st.floats(-40.0, 40.0, allow_nan=False).filter(lambda x: not (x <= 0 and x == math.floor(x)))
nus = st.floats(0.05, 0.95)


@given(finite_x)
def test_gamma_times_rgamma(x):
    try:
        g = gamma(x).value
    except OverflowError:
        return  # only where Gamma is representable
    assert abs(g * rgamma(x) - 1.0) <= 4 * 2.220446049250313e-16


@given(st.floats(0.1, 2.0), st.floats(0.2, 2.0))
def test_ml_at_zero(alpha, beta):
    assert mittag_leffler(alpha, beta, 0.0).value == rgamma(beta)


@settings(max_examples=40, deadline=None)
@given(nus, st.floats(0.0, 8.0))
def test_m_is_nonnegative(nu, x):
    assert wright_m(nu, x).value >= 0.0


@settings(max_examples=30, deadline=None)
@given(nus, st.floats(0.01, 4.0), st.floats(0.1, 5.0))
def test_cauchy_green_even(nu, x, t):
    spec = GreenSpec(Problem.CAUCHY, nu)
    assert green_cauchy(spec, x, t).value == green_cauchy(spec, -x, t).value


@settings(max_examples=30, deadline=None)
@given(st.floats(0.3, 2.0), st.floats(-1.0, 1.0), st.floats(0.1, 5.0))
def test_stable_mirror(alpha, frac, x):
    bound = min(alpha, 2.0 - alpha)
    p = validate(alpha, frac * bound)
    if p.is_singular():
        return
    assert stable_density(p, -x).value == stable_density(p.mirrored(), x).value
