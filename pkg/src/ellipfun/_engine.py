"""Series and duplication core shared by the lattice and Weierstrass modules.

Everything here works on a *normalized* lattice with basis ``(1, tau)``,
``tau`` in the standard fundamental domain, so the shortest lattice vector
has length one. Inputs are numpy arrays; callers deal with scaling,
argument reduction and error reporting.
"""

import math

import numpy as np
from scipy.special import zeta as _hurwitz_zeta

# Arguments are halved until |w| < HALVE_RADIUS (in units of the shortest
# lattice vector) before the Laurent series is summed.
HALVE_RADIUS = 0.4
N_LAURENT = 32


def gauss_reduce(omega1, omega2):
    """Reduce a positively oriented basis to one with tau in the fundamental domain.

    Returns ``(u1, u2, M)`` where ``M`` is the integer matrix with
    ``u1 = M[0][0]*omega1 + M[0][1]*omega2`` and
    ``u2 = M[1][0]*omega1 + M[1][1]*omega2``.
    """
    u1, u2 = complex(omega1), complex(omega2)
    M = [[1, 0], [0, 1]]
    for _ in range(200):
        n = round((u2 / u1).real)
        if n:
            u2 -= n * u1
            M[1] = [M[1][0] - n * M[0][0], M[1][1] - n * M[0][1]]
        if abs(u2) < abs(u1) * (1.0 - 1e-15):
            u1, u2 = u2, -u1
            M = [M[1], [-M[0][0], -M[0][1]]]
        else:
            break
    return u1, u2, M


def _divisor_power_sum(N, p):
    total = 0
    d = 1
    while d * d <= N:
        if N % d == 0:
            total += d**p
            e = N // d
            if e != d:
                total += e**p
        d += 1
    return total


def eisenstein_normalized(order, tau):
    """G_order for the lattice Z + Z*tau via its q-expansion (row-summed lattice sum)."""
    q = np.exp(2j * np.pi * tau)
    # (2 pi i)^k / (k-1)!  for even k
    pref = (2j * math.pi) ** order / math.factorial(order - 1)
    acc = 0j
    for N in range(1, 2000):
        term = _divisor_power_sum(N, order - 1) * q**N
        acc += term
        if N > 2 * order and abs(term) < 1e-18 * max(1.0, abs(acc)):
            break
    return 2.0 * float(_hurwitz_zeta(order, 1)) + 2.0 * pref * acc


def laurent_coefficients(g2, g3, n_terms=N_LAURENT):
    """Coefficients c_1..c_N of wp(z) = z**-2 + sum c_n z**(2n).

    c_1 = g2/20, c_2 = g3/28 and the rest follow from differentiating the
    differential equation (wp')**2 = 4 wp**3 - g2 wp - g3.
    """
    c = np.zeros(n_terms + 1, dtype=complex)
    c[1] = g2 / 20.0
    if n_terms >= 2:
        c[2] = g3 / 28.0
    for n in range(3, n_terms + 1):
        s = 0j
        for m in range(1, n - 1):
            s += c[m] * c[n - 1 - m]
        c[n] = 3.0 * s / ((2 * n + 3) * (n - 2))
    return c[1:]


def reduce_normalized(w, tau):
    """Split w = w_red + m + n*tau with lattice coordinates of w_red in [-1/2, 1/2]."""
    w = np.asarray(w, dtype=complex)
    b = w.imag / tau.imag
    a = w.real - b * tau.real
    m = np.round(a)
    n = np.round(b)
    return w - m - n * tau, m, n


def _series(coeffs, v, want_sigma):
    v2 = v * v
    n = np.arange(1, len(coeffs) + 1)
    # Horner in v**2 for each of the four series
    p = np.zeros_like(v)
    dp = np.zeros_like(v)
    zt = np.zeros_like(v)
    ls = np.zeros_like(v)
    for k in range(len(coeffs) - 1, -1, -1):
        ck = coeffs[k]
        nk = n[k]
        p = p * v2 + ck
        dp = dp * v2 + 2 * nk * ck
        zt = zt * v2 + ck / (2 * nk + 1)
        if want_sigma:
            ls = ls * v2 + ck / ((2 * nk + 1) * (2 * nk + 2))
    with np.errstate(divide="ignore", invalid="ignore"):
        P = 1.0 / v2 + v2 * p
        dP = -2.0 / (v2 * v) + v * dp
        Z = 1.0 / v - v * v2 * zt
    S = v * np.exp(-(v2 * v2) * ls) if want_sigma else None
    return P, dP, Z, S


def evaluate_normalized(coeffs, g2n, w, want_sigma=False):
    """wp, wp', zeta (and sigma) at reduced normalized arguments ``w``.

    The argument is halved until it is small enough for the Laurent series,
    then the duplication formulas are applied the same number of times:

        wp(2z)  = a**2/4 - 2 wp(z),        a = wp''(z)/wp'(z)
        wp'(2z) = a (wp(z) - wp(2z)) - wp'(z)
        zeta(2z) = 2 zeta(z) + a/2
        sigma(2z) = -wp'(z) sigma(z)**4
    """
    w = np.asarray(w, dtype=complex)
    r = np.abs(w)
    with np.errstate(divide="ignore"):
        m = np.where(r > HALVE_RADIUS, np.ceil(np.log2(np.maximum(r, 1e-300) / HALVE_RADIUS)), 0)
    m = m.astype(int)
    v = w / np.exp2(m)
    P, dP, Z, S = _series(coeffs, v, want_sigma)
    mmax = int(m.max()) if m.size else 0
    with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
        for j in range(mmax):
            active = j < m
            a = (6.0 * P * P - 0.5 * g2n) / dP
            Pn = 0.25 * a * a - 2.0 * P
            dPn = a * (P - Pn) - dP
            Zn = 2.0 * Z + 0.5 * a
            if want_sigma:
                S = np.where(active, -dP * S**4, S)
            P = np.where(active, Pn, P)
            dP = np.where(active, dPn, dP)
            Z = np.where(active, Zn, Z)
    return P, dP, Z, S
