"""The simple pendulum x'' + (g/l) sin x = 0 in its three regimes.

All closed forms use the time origin x(0) = 0 with positive velocity, so
the oscillatory solution starts at the bottom moving toward +x0.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ..errors import ParameterDomain, RegimeMismatch
from ..integrals import complete_K
from ..jacobi import am, jacobi_triple

_SEPARATRIX_TOL = 1e-12


@dataclass(frozen=True)
class PendulumParams:
    """Length l, gravity g and amplitude x0 (the largest angle reached)."""

    l: float
    g: float
    x0: float

    def __post_init__(self):
        if not (self.l > 0 and self.g > 0):
            raise ParameterDomain(f"l and g must be positive, got l={self.l!r}, g={self.g!r}")

    @property
    def omega(self) -> float:
        return math.sqrt(self.g / self.l)

    @property
    def regime(self) -> str:
        a = abs(self.x0)
        if abs(a - math.pi) <= _SEPARATRIX_TOL:
            return "separatrix"
        if a < math.pi:
            return "oscillatory"
        raise RegimeMismatch(f"|x0| = {a!r} exceeds pi; use CirculatingParams")

    @property
    def modulus(self) -> float:
        return math.sin(abs(self.x0) / 2)

    def initial_state(self) -> np.ndarray:
        """(x, dx/dt) at t = 0 for the closed-form branch."""
        if self.regime == "separatrix":
            return np.array([0.0, 2.0 * self.omega])
        return np.array([0.0, 2.0 * self.omega * self.modulus])


@dataclass(frozen=True)
class CirculatingParams:
    """Pendulum going over the top, described by its angular velocity v0 at x = 0.

    Circulation needs v0**2 > 4 g / l.
    """

    l: float
    g: float
    v0: float

    def __post_init__(self):
        if not (self.l > 0 and self.g > 0):
            raise ParameterDomain(f"l and g must be positive, got l={self.l!r}, g={self.g!r}")

    @property
    def omega(self) -> float:
        return math.sqrt(self.g / self.l)

    @property
    def modulus(self) -> float:
        """k with k**2 = 4 g / (l v0**2)."""
        return 2.0 * self.omega / abs(self.v0)

    def initial_state(self) -> np.ndarray:
        return np.array([0.0, float(self.v0)])


def pendulum_field(l: float, g: float):
    """Right-hand side (x, v) -> (v, -(g/l) sin x); works on batched columns."""
    w2 = g / l

    def f(s):
        out = np.empty_like(s)
        out[0] = s[1]
        out[1] = -w2 * np.sin(s[0])
        return out

    return f


def pendulum_energy(l: float, g: float, s) -> float:
    """v**2/2 - (g/l) cos x, conserved by the flow."""
    return 0.5 * s[1] ** 2 - (g / l) * np.cos(s[0])


def pendulum_oscillatory(p: PendulumParams, t):
    """x(t) = 2 arcsin(k sn(sqrt(g/l) t, k)) with k = sin(x0/2)."""
    if p.regime != "oscillatory":
        raise RegimeMismatch("pendulum_oscillatory needs |x0| < pi")
    k = p.modulus
    sn = jacobi_triple(p.omega * np.asarray(t, dtype=float), k).sn
    x = 2.0 * np.arcsin(k * sn)
    return float(x) if np.ndim(t) == 0 else x


def pendulum_period(p: PendulumParams) -> float:
    """4 sqrt(l/g) K(sin(x0/2)); infinite on the separatrix."""
    if p.regime == "separatrix":
        return math.inf
    return 4.0 * complete_K(p.modulus) / p.omega


def pendulum_separatrix(p: PendulumParams, t):
    """x(t) = 4 arctan(exp(sqrt(g/l) t)) - pi, tending to +-pi as t -> +-inf."""
    if p.regime != "separatrix":
        raise RegimeMismatch("pendulum_separatrix needs |x0| = pi")
    x = 4.0 * np.arctan(np.exp(p.omega * np.asarray(t, dtype=float))) - math.pi
    return float(x) if np.ndim(t) == 0 else x


def pendulum_circulating(p: CirculatingParams, t):
    """x(t) = 2 am(v0 t / 2, k) with k**2 = 4 g / (l v0**2) < 1."""
    k = p.modulus
    if not k < 1.0:
        raise RegimeMismatch(f"v0 = {p.v0!r} does not clear the top (need v0**2 > 4g/l)")
    sign = 1.0 if p.v0 > 0 else -1.0
    x = sign * 2.0 * am(0.5 * abs(p.v0) * np.asarray(t, dtype=float), k)
    return float(x) if np.ndim(t) == 0 else x
