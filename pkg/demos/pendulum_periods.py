"""Pendulum period against amplitude: elliptic formula, RK4 timing and the small-angle value."""

import math

import numpy as np

from ellipfun import dynamics as dyn

l, g = 1.0, 9.81
T0 = 2 * math.pi * math.sqrt(l / g)
amps = np.array([0.01, 0.5, 1.0, 1.5, 2.0, 2.5, 3.0])
params = [dyn.PendulumParams(l, g, x0) for x0 in amps]

dt = 1e-4
t_max = 1.05 * max(dyn.pendulum_period(p) for p in params)
s0 = np.stack([p.initial_state() for p in params], axis=1)
tr = dyn.rk4_integrate(dyn.pendulum_field(l, g), s0, dt, int(t_max / dt))

print(" x0     T/T0 (elliptic)  T/T0 (RK4)      rel. diff")
for i, p in enumerate(params):
    x = tr.states[:, 0, i]
    j = np.nonzero((x[:-1] < 0) & (x[1:] >= 0))[0][0]
    T_rk = tr.times[j] - x[j] / (x[j + 1] - x[j]) * dt
    T = dyn.pendulum_period(p)
    print(f"{p.x0:4.2f}   {T / T0:.12f}   {T_rk / T0:.12f}   {abs(T_rk - T) / T:.1e}")

# above the separatrix the angle grows without bound
p = dyn.CirculatingParams(l, g, 8.0)
t = np.linspace(0, 3, 7)
print("circulating x(t):", np.round(dyn.pendulum_circulating(p, t), 6))
