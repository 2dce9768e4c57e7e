"""Torque-free rigid body (Euler-Poinsot) and its closed-form Jacobi solution.

The equations are

    m1' = (l3 - l2) m2 m3,   m2' = (l1 - l3) m1 m3,   m3' = (l2 - l1) m1 m2

with inverse moments l1 >= l2 >= l3 > 0. They conserve the energy
2 H1 = l1 m1^2 + l2 m2^2 + l3 m3^2 and the squared momentum r^2 = |m|^2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from ..errors import ParameterDomain
from ..jacobi import jacobi_triple
from .integrate import rk4_step


class EulerState(NamedTuple):
    m1: object
    m2: object
    m3: object


@dataclass(frozen=True)
class EulerParams:
    lambda1: float
    lambda2: float
    lambda3: float
    H1: float
    r2: float

    @classmethod
    def from_state(cls, lambdas, m) -> "EulerParams":
        l1, l2, l3 = map(float, lambdas)
        m = np.asarray(m, dtype=float)
        H1 = 0.5 * (l1 * m[0] ** 2 + l2 * m[1] ** 2 + l3 * m[2] ** 2)
        return cls(l1, l2, l3, float(H1), float(m @ m))

    @property
    def lambdas(self):
        return self.lambda1, self.lambda2, self.lambda3


@dataclass(frozen=True)
class EulerBranch:
    """How the closed form is assembled for a given parameter set.

    case is "main" (r^2 >= 2 H1/l2, m2 ~ sn, m1 ~ cn, m3 ~ dn) or "swapped"
    (r^2 < 2 H1/l2, the roles of m1 and m3 exchange). Both start at
    (amp1, 0, amp3). ``m1_sign`` is the global sign on m1 selected by
    comparing against an RK4 step; with positive radicals it is +1.
    """

    case: str
    k: float
    frequency: float
    amplitudes: tuple
    m1_sign: float


def _check(e: EulerParams):
    l1, l2, l3 = e.lambdas
    if not (l1 >= l2 >= l3 > 0 and l1 > l3):
        raise ParameterDomain(f"need l1 >= l2 >= l3 > 0 with l1 > l3, got {e.lambdas}")
    if not e.H1 > 0:
        raise ParameterDomain(f"H1 must be positive, got {e.H1!r}")
    if not (2 * e.H1 / l1 < e.r2 < 2 * e.H1 / l3):
        raise ParameterDomain(
            f"r^2 = {e.r2!r} outside (2H1/l1, 2H1/l3) = ({2 * e.H1 / l1!r}, {2 * e.H1 / l3!r}): "
            "the momentum sphere misses the energy ellipsoid"
        )


def _main_k2(e):
    l1, l2, l3 = e.lambdas
    p = 2 * e.H1 - e.r2 * l3  # > 0
    q = e.r2 * l1 - 2 * e.H1  # > 0
    num = (l1 - l2) * p
    den = (l2 - l3) * q
    return num, den


def euler_top_modulus(e: EulerParams) -> float:
    """Modulus k of the solution (not k^2).

    For r^2 >= 2 H1/l2, k^2 = (l1-l2)(2H1 - r^2 l3) / ((l2-l3)(r^2 l1 - 2H1));
    otherwise the reciprocal, which is the modulus after swapping axes 1 and 3.
    It is 0 for the symmetric top l1 = l2 and tends to 1 as r^2 -> 2 H1/l2.
    """
    _check(e)
    num, den = _main_k2(e)
    if num <= den:
        return math.sqrt(num / den)
    return math.sqrt(den / num)


def euler_field(lambdas):
    """Right-hand side of the Euler equations; the l_i may be arrays matching a batch axis."""
    l1, l2, l3 = (np.asarray(x, dtype=float) for x in lambdas)
    c1, c2, c3 = l3 - l2, l1 - l3, l2 - l1

    def f(m):
        out = np.empty_like(m)
        out[0] = c1 * m[1] * m[2]
        out[1] = c2 * m[0] * m[2]
        out[2] = c3 * m[0] * m[1]
        return out

    return f


def euler_invariants(lambdas, m):
    """(H1, H2) = (sum l_i m_i^2 / 2, |m|^2 / 2)."""
    l1, l2, l3 = lambdas
    m1, m2, m3 = m
    return 0.5 * (l1 * m1**2 + l2 * m2**2 + l3 * m3**2), 0.5 * (m1**2 + m2**2 + m3**2)


def _assemble(branch, t):
    tau = branch.frequency * t
    sn, cn, dn = jacobi_triple(tau, branch.k)
    a1, a2, a3 = branch.amplitudes
    if branch.case == "main":
        return branch.m1_sign * a1 * cn, a2 * sn, a3 * dn
    return branch.m1_sign * a1 * dn, a2 * sn, a3 * cn


def euler_top_branch(e: EulerParams) -> EulerBranch:
    """Choose the case, modulus, frequency and amplitudes for ``e``."""
    _check(e)
    l1, l2, l3 = e.lambdas
    p = 2 * e.H1 - e.r2 * l3
    q = e.r2 * l1 - 2 * e.H1
    num, den = _main_k2(e)
    a1 = math.sqrt(p / (l1 - l3))
    a3 = math.sqrt(q / (l1 - l3))
    if num <= den:
        branch = EulerBranch("main", math.sqrt(num / den), math.sqrt((l2 - l3) * q), (a1, math.sqrt(p / (l2 - l3)), a3), 1.0)
    else:
        branch = EulerBranch("swapped", math.sqrt(den / num), math.sqrt((l1 - l2) * p), (a1, math.sqrt(q / (l1 - l2)), a3), 1.0)
    # fix the sign of m1 against a short RK4 step from the common initial point
    dt = 1e-4
    ref = rk4_step(euler_field(e.lambdas), np.array([a1, 0.0, a3]), dt)
    errs = {}
    for sgn in (1.0, -1.0):
        cand = EulerBranch(branch.case, branch.k, branch.frequency, branch.amplitudes, sgn)
        errs[sgn] = float(np.linalg.norm(np.array(_assemble(cand, dt)) - ref))
    best = min(errs, key=errs.get)
    return EulerBranch(branch.case, branch.k, branch.frequency, branch.amplitudes, best)


def euler_top_solution(e: EulerParams, t, branch: EulerBranch | None = None) -> EulerState:
    """Closed-form (m1, m2, m3) at time t, with m2(0) = 0 and m1(0), m3(0) > 0."""
    branch = branch or euler_top_branch(e)
    t = np.asarray(t, dtype=float)
    m = _assemble(branch, t)
    if t.ndim == 0:
        return EulerState(*(float(x) for x in m))
    return EulerState(*m)


def symmetric_top_solution(lambda1: float, lambda3: float, A: float, C: float, t) -> EulerState:
    """Trigonometric solution for l1 = l2: m3 = A and m1 + i m2 = C exp(i A (l1 - l3) t)."""
    if lambda1 == lambda3:
        raise ParameterDomain("l1 = l3 gives constant motion; need l1 != l3")
    w = A * (lambda1 - lambda3) * np.asarray(t, dtype=float)
    m1, m2 = C * np.cos(w), C * np.sin(w)
    m3 = np.full_like(w, A)
    if w.ndim == 0:
        return EulerState(float(m1), float(m2), float(A))
    return EulerState(m1, m2, m3)
