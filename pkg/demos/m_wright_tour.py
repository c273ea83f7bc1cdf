"""A short walk through the M-Wright function.

Run with ``python3 demos/m_wright_tour.py``. Prints numbers only; pipe the
CLI output into any plotting tool if pictures are wanted.
"""
import math

from wrightkit import integrate, m_abs_moment, wright_m
from wrightkit.wright import m_asymptotic, m_lk_integral, m_series

# At nu = 1/2 the function is a Gaussian, which makes a good first sanity check.
for x in (0.0, 1.0, 3.0):
    got = wright_m(0.5, x).value
    print(f"M_1/2({x}) = {got:.15f}   gaussian {math.exp(-x * x / 4) / math.sqrt(math.pi):.15f}")

# The dispatcher switches branches as x grows. The method tag says which one ran.
print()
for x in (0.5, 2.0, 4.0, 6.0):
    r = wright_m(0.8, x)
    print(f"M_0.8({x}) = {r.value:.6e}  via {r.method.value}, err_est {r.err_est:.1e}")

# In the overlap the series and the integral representation agree closely.
print()
s, q = m_series(0.7, 1.5), m_lk_integral(0.7, 1.5)
print(f"series {s.value:.15f}\nintegral {q.value:.15f}")

# The saddle-point form is crude near the peak but fine in the tail.
print()
for y in (1.0, 3.0, 5.0):
    ratio = m_asymptotic(0.75, y).value / wright_m(0.75, y / 0.75).value
    print(f"nu=0.75, y={y}: asymptotic/true = {ratio:.4f}")

# M_nu is a probability density on x >= 0 with known absolute moments.
print()
for nu in (0.25, 0.75):
    mass = integrate(lambda x: wright_m(nu, x).value, 0.0, math.inf).value
    second = integrate(lambda x: x * x * wright_m(nu, x).value, 0.0, math.inf).value
    print(f"nu={nu}: mass {mass:.10f}, second moment {second:.8f} (exact {m_abs_moment(nu, 2.0):.8f})")
