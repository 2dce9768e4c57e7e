"""A short walk through one lattice: invariants, half periods, the curve and the group law."""

import math

import numpy as np

from ellipfun import (
    curve_point,
    half_period_values,
    invert_wp,
    new_lattice,
    quasi_periods,
    wp,
    wp_addition,
)

lat = new_lattice(1.0, 0.3 + 1.7j)
print(f"periods      {lat.omega1}, {lat.omega2}")
print(f"g2, g3       {lat.g2:.12g}, {lat.g3:.12g}")
print(f"discriminant {lat.discriminant:.6g}")

e = half_period_values(lat)
print("e1, e2, e3  ", *(f"{v:.10g}" for v in e.as_tuple()))
print(f"e1+e2+e3     {abs(sum(e.as_tuple())):.2e}")

q = quasi_periods(lat)
print(f"Legendre     |tau1 w2 - tau2 w1 - 2 pi i| = {abs(q.tau1 * lat.omega2 - q.tau2 * lat.omega1 - 2j * math.pi):.2e}")

# z -> (wp, wp') lands on y^2 = 4x^3 - g2 x - g3
z = np.array([0.1 + 0.2j, -0.35 + 0.4j, 0.45 - 0.1j])
x, y = curve_point(lat, z)
print("curve residuals", np.abs(y**2 - (4 * x**3 - lat.g2 * x - lat.g3)))

# chord rule on the curve is addition in C / Lambda
u, v = 0.21 + 0.13j, -0.08 + 0.35j
print(f"wp(u+v) direct {wp(lat, u + v):.12g}")
print(f"wp(u+v) chord  {wp_addition(lat, u, v):.12g}")

w = wp(lat, u)
z = invert_wp(lat, w)
print(f"invert wp(u): z = {z:.12g} (u = {u}), wp(z) - w = {abs(wp(lat, z) - w):.1e}")
