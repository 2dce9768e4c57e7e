"""Jacobi amplitude and the elliptic functions sn, cn, dn for real modulus 0 <= k <= 1.

Evaluation uses the descending Landen (AGM) phase recursion; k = 1 falls
back to the hyperbolic closed forms. All functions broadcast over numpy
arrays of t and k.
"""

from __future__ import annotations

from typing import NamedTuple

import numpy as np

from .errors import DegenerateDenominator, DomainError

_MAX_ITER = 40


class JacobiTriple(NamedTuple):
    sn: object
    cn: object
    dn: object


def _prepare(t, k):
    t = np.asarray(t, dtype=float)
    k = np.asarray(k, dtype=float)
    if np.any((k < 0) | (k > 1)) or np.any(np.isnan(k)):
        raise DomainError("modulus must lie in [0, 1]")
    t, k = np.broadcast_arrays(t, k)
    return t, k


def _out(x, scalar):
    return float(x) if scalar else x


def _amplitude(t, k):
    # descending Landen recursion, A&S 16.4
    one = k == 1.0
    kk = np.where(one, 0.5, k)  # placeholder for the k = 1 lanes
    a = np.ones_like(kk)
    b = np.sqrt((1.0 - kk) * (1.0 + kk))
    cs = []
    as_ = []
    for _ in range(_MAX_ITER):
        c = 0.5 * (a - b)
        a, b = 0.5 * (a + b), np.sqrt(a * b)
        cs.append(c)
        as_.append(a)
        if np.all(np.abs(c) <= 1e-17 * a):
            break
    n = len(cs)
    phi = np.exp2(n) * as_[-1] * t
    for j in range(n - 1, -1, -1):
        phi = 0.5 * (phi + np.arcsin(cs[j] / as_[j] * np.sin(phi)))
    return np.where(one, np.arctan(np.sinh(t)), phi)


def am(t, k):
    """Amplitude phi with F(k, phi) = t."""
    scalar = np.ndim(t) == 0 and np.ndim(k) == 0
    t, k = _prepare(t, k)
    return _out(_amplitude(t, k), scalar)


def jacobi_triple(t, k) -> JacobiTriple:
    """(sn, cn, dn) at t for modulus k."""
    scalar = np.ndim(t) == 0 and np.ndim(k) == 0
    t, k = _prepare(t, k)
    phi = _amplitude(t, k)
    sn = np.sin(phi)
    cn = np.cos(phi)
    # k'^2 + k^2 cn^2 has no cancellation, unlike 1 - k^2 sn^2
    dn = np.sqrt((1.0 - k) * (1.0 + k) + k * k * cn * cn)
    one = k == 1.0
    if np.any(one):
        sech = 1.0 / np.cosh(t)
        sn = np.where(one, np.tanh(t), sn)
        cn = np.where(one, sech, cn)
        dn = np.where(one, sech, dn)
    return JacobiTriple(_out(sn, scalar), _out(cn, scalar), _out(dn, scalar))


def jacobi_derivatives(t, k):
    """(d sn/dt, d cn/dt, d dn/dt) = (cn dn, -sn dn, -k^2 sn cn)."""
    sn, cn, dn = jacobi_triple(t, k)
    k = np.asarray(k, dtype=float)
    d = (cn * dn, -sn * dn, -k * k * sn * cn)
    if all(np.ndim(x) == 0 for x in d):
        return tuple(float(x) for x in d)
    return d


def jacobi_addition(t, tau, k) -> JacobiTriple:
    """Triple at t + tau from the triples at t and tau via the addition theorems."""
    s1, c1, d1 = jacobi_triple(t, k)
    s2, c2, d2 = jacobi_triple(tau, k)
    k2 = np.asarray(k, dtype=float) ** 2
    den = 1.0 - k2 * s1 * s1 * s2 * s2
    if np.any(den <= 1e-12):
        raise DegenerateDenominator("1 - k^2 sn^2(t) sn^2(tau) vanishes")
    sn = (s1 * c2 * d2 + s2 * c1 * d1) / den
    cn = (c1 * c2 - s1 * s2 * d1 * d2) / den
    dn = (d1 * d2 - k2 * s1 * s2 * c1 * c2) / den
    scalar = all(np.ndim(x) == 0 for x in (sn, cn, dn))
    return JacobiTriple(_out(sn, scalar), _out(cn, scalar), _out(dn, scalar))


def jacobi_ode_residuals(t, k):
    """Residuals of the first-order ODEs satisfied by sn, cn and dn.

    r1 = sn'^2 - (1 - sn^2)(1 - k^2 sn^2)
    r2 = cn'^2 - (1 - cn^2)(k'^2 + k^2 cn^2)
    r3 = dn'^2 - (1 - dn^2)(dn^2 - k'^2)
    """
    sn, cn, dn = jacobi_triple(t, k)
    dsn, dcn, ddn = jacobi_derivatives(t, k)
    k = np.asarray(k, dtype=float)
    k2 = k * k
    kp2 = (1.0 - k) * (1.0 + k)
    r1 = dsn**2 - (1.0 - sn**2) * (1.0 - k2 * sn**2)
    r2 = dcn**2 - (1.0 - cn**2) * (kp2 + k2 * cn**2)
    r3 = ddn**2 - (1.0 - dn**2) * (dn**2 - kp2)
    if all(np.ndim(x) == 0 for x in (r1, r2, r3)):
        return float(r1), float(r2), float(r3)
    return r1, r2, r3
