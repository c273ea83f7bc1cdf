import math

import numpy as np
import pytest
import scipy.special as sps

import oracles
from wrightkit import (DomainError, GreenSpec, PointMass, Problem, SampledFunction, four_sisters, green_cauchy,
                       green_laplace, green_signalling, integrate, laplace_fwd, reciprocity, solve_cauchy,
                       solve_signalling, three_sisters)


def test_cauchy_green_is_heat_kernel_at_half():
    spec = GreenSpec(Problem.CAUCHY, 0.5, 2.0)
    for x, t in ((0.0, 1.0), (1.3, 0.4), (-2.0, 3.0)):
        ref = math.exp(-x * x / (8 * t)) / math.sqrt(8 * math.pi * t)
        assert green_cauchy(spec, x, t).value == pytest.approx(ref, rel=1e-13)


def test_green_at_time_zero_is_a_point_mass():
    spec = GreenSpec(Problem.CAUCHY, 0.7)
    assert green_cauchy(spec, 0.0, 0.0) == PointMass(0.0, 1.0)
    s = spec.with_problem("signalling")
    assert isinstance(green_signalling(s, 0.0, 0.0), PointMass)
    assert green_signalling(s, 1.0, 0.0).value == 0.0


def test_wave_limit_is_refused_pointwise():
    with pytest.raises(DomainError):
        green_cauchy(GreenSpec(Problem.CAUCHY, 1.0), 0.5, 1.0)
    with pytest.raises(DomainError):
        GreenSpec(Problem.CAUCHY, 1.2)
    with pytest.raises(DomainError):
        GreenSpec(Problem.CAUCHY, 0.5, 0.0)
    with pytest.raises(DomainError):
        green_signalling(GreenSpec(Problem.SIGNALLING, 0.5), -1.0, 1.0)


@pytest.mark.parametrize("nu", [0.3, 0.75])
def test_green_laplace_transforms(nu):
    for prob in (Problem.CAUCHY, Problem.SIGNALLING):
        spec = GreenSpec(prob, nu, 1.5)
        g = green_cauchy if prob is Problem.CAUCHY else green_signalling
        for s in (0.7, 2.0):
            num = laplace_fwd(lambda t: g(spec, 0.8, t).value if t > 0 else 0.0, s).value
            assert num == pytest.approx(green_laplace(spec, 0.8, s), rel=1e-7)


@pytest.mark.parametrize("nu", [0.25, 0.6])
def test_reciprocity_against_oracle(nu):
    for x, t, d in ((0.5, 1.0, 1.0), (2.0, 0.5, 4.0)):
        a, b, c = reciprocity(nu, d, x, t)
        ref = oracles.f_wright(nu, x / math.sqrt(d) * t ** -nu)
        for v in (a, b, c):
            assert v == pytest.approx(ref, rel=1e-10)


def test_three_sisters_closed_forms():
    r = three_sisters(1.0, 0.5)
    assert r.phi.value == pytest.approx(sps.erfc(1 / (2 * math.sqrt(0.5))), rel=1e-15)
    with pytest.raises(DomainError):
        three_sisters(-1.0, 1.0)


def test_four_sisters():
    got = four_sisters(0.5, 1.0, 1.0)
    assert len(got) == 3
    got = four_sisters(0.3, 1.0, 2.0)
    assert sorted(got) == pytest.approx([0.0, 0.3, 0.7, 1.0])
    for mu, r in got.items():
        ref = 2.0 ** (mu - 1) * oracles.wright(-0.3, mu, -1.0 * 2.0 ** -0.3)
        assert r.value == pytest.approx(ref, rel=1e-9)


def test_cauchy_solution_of_box_data():
    # box data on [-1, 1], zero-padded so the data support covers the kernel
    xs = np.array([-4.0, -1.0 - 1e-12, -1.0, 1.0, 1.0 + 1e-12, 4.0])
    box = SampledFunction(xs, np.array([0.0, 0.0, 1.0, 1.0, 0.0, 0.0]))
    spec = GreenSpec(Problem.CAUCHY, 0.5)
    u = solve_cauchy(spec, box, 0.3, 0.5).value
    ref = 0.5 * (math.erf((1 - 0.3) / (2 * math.sqrt(0.5))) + math.erf((1 + 0.3) / (2 * math.sqrt(0.5))))
    assert u == pytest.approx(ref, abs=1e-8)


def test_signalling_solution_of_step_is_step_response():
    spec = GreenSpec(Problem.SIGNALLING, 0.5)
    g = SampledFunction.from_callable(lambda t: 1.0, 0.0, 2.0, 21)
    u = solve_signalling(spec, g, 1.0, 2.0).value
    assert u == pytest.approx(sps.erfc(1 / (2 * math.sqrt(2.0))), abs=1e-8)


def test_cauchy_green_has_unit_mass():
    spec = GreenSpec(Problem.CAUCHY, 0.4, 3.0)
    m = integrate(lambda x: green_cauchy(spec, x, 1.7).value, 0.0, math.inf).value
    assert 2 * m == pytest.approx(1.0, abs=1e-7)
