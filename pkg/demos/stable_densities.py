"""Levy stable densities in Feller's parameterization.

Extremal densities are computed through the M-Wright function, the rest by
series or characteristic-function inversion. Reciprocity maps the Gaussian
(alpha = 2) onto the Levy-Smirnov density (alpha = 1/2).
"""
import math

from wrightkit import stable_density, validate
from wrightkit.stable import extremal_via_wright, feller_series, reciprocity_map, stable_mass

print("extremal alpha=0.75, theta=-0.75")
p = validate(0.75, -0.75)
for x in (0.5, 1.0, 2.0):
    print(f"  x={x}: bridge {extremal_via_wright(0.75, x).value:.12f}  series {feller_series(p, x).value:.12f}")

inv_alpha, theta_star = reciprocity_map(0.5, 0.0)
print(f"\nstarting from (1/2, 0): the dual index is {inv_alpha}, the resulting skewness {theta_star}")
g = validate(inv_alpha, 0.0)
for x in (0.2, 1.0, 3.0):
    lhs = x ** -1.5 * stable_density(g, x ** -0.5).value
    levy = x ** -1.5 * math.exp(-1 / (4 * x)) / (2 * math.sqrt(math.pi))
    print(f"  x={x}: {lhs:.12f}  vs Levy-Smirnov {levy:.12f}")

print("\ntotal mass")
for a, th in ((0.6, 0.2), (1.3, -0.5), (1.9, 0.05)):
    print(f"  alpha={a}, theta={th}: {stable_mass(validate(a, th)).value:.8f}")
