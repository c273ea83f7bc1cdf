"""Fundamental solutions of the time-fractional diffusion-wave equation.

Shows the Cauchy and signalling Green functions, the relation tying them to
F_nu, and the solution for box-shaped initial data as nu moves from the
slow-diffusion regime towards the wave limit.
"""
import math

import numpy as np

from wrightkit import (GreenSpec, Problem, SampledFunction, green_cauchy, green_signalling, reciprocity,
                       solve_cauchy, wright_f)

x, t = 1.0, 1.0
for nu in (0.25, 0.5, 0.75, 0.95):
    gc = green_cauchy(GreenSpec(Problem.CAUCHY, nu), x, t).value
    gs = green_signalling(GreenSpec(Problem.SIGNALLING, nu), x, t).value
    print(f"nu={nu:<5} G_c={gc:.6f}  G_s={gs:.6f}")

# 2 nu x G_c, t G_s and F_nu at the similarity variable coincide.
print()
a, b, c = reciprocity(0.6, 1.0, 1.5, 2.0)
print(f"reciprocity at nu=0.6: {a:.14f} {b:.14f} {c:.14f}")
print(f"F_0.6 directly:        {wright_f(0.6, 1.5 * 2.0 ** -0.6).value:.14f}")

# Box data on [-1, 1]. The explicit zero samples outside keep the edges sharp.
box = SampledFunction(np.array([-6.0, -1.0 - 1e-12, -1.0, 1.0, 1.0 + 1e-12, 6.0]),
                      np.array([0.0, 0.0, 1.0, 1.0, 0.0, 0.0]))
print()
print("u(x, t=1) for box data")
print("x     " + "  ".join(f"nu={nu:<4}" for nu in (0.25, 0.5, 0.75)))
for xv in (0.0, 0.5, 1.0, 1.5, 2.5):
    row = [solve_cauchy(GreenSpec(Problem.CAUCHY, nu), box, xv, 1.0).value for nu in (0.25, 0.5, 0.75)]
    print(f"{xv:<5} " + "  ".join(f"{v:.5f} " for v in row))

# The nu=1/2 column is the heat equation; compare with erf.
ref = 0.5 * (math.erf(1.0 / 2.0) + math.erf(1.0 / 2.0))
print(f"\nheat-equation check at x=0: {ref:.10f}")
