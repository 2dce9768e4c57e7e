"""Legendre-form elliptic integrals of the first, second and third kind.

Incomplete integrals use adaptive Gauss-Kronrod quadrature on one
half-period block, extended to any amplitude with F(k, phi + j*pi) =
F(k, phi) + 2j*K (and likewise for E and Pi). Complete integrals use the
arithmetic-geometric mean. Everything is real: 0 <= k <= 1.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

import numpy as np
from scipy.integrate import IntegrationWarning, quad

from .errors import CharacteristicPole, DivergentIntegral, DomainError, ModulusOne

_QUAD_TOL = 1e-13
_AGM_MAX_ITER = 40


def _check_k(k):
    k = float(k)
    if not (0.0 <= k <= 1.0):
        raise DomainError(f"modulus must lie in [0, 1], got {k!r}")
    return k


def _split(phi):
    # phi = j*pi + r with r in [-pi/2, pi/2]
    j = round(phi / math.pi)
    return j, phi - j * math.pi


def _quad(f, r):
    if r == 0.0:
        return 0.0
    with warnings.catch_warnings():
        # quad flags roundoff once it is already at machine precision
        warnings.simplefilter("ignore", IntegrationWarning)
        val, _ = quad(f, 0.0, r, epsabs=_QUAD_TOL, epsrel=_QUAD_TOL, limit=200)
    return val


def incomplete_F(k: float, phi: float) -> float:
    """F(k, phi) = int_0^phi dt / sqrt(1 - k^2 sin^2 t)."""
    k, phi = _check_k(k), float(phi)
    if k == 1.0 and abs(phi) >= math.pi / 2:
        raise DivergentIntegral("F(1, phi) diverges for |phi| >= pi/2")
    j, r = _split(phi)
    k2 = k * k
    val = _quad(lambda t: 1.0 / math.sqrt(1.0 - k2 * math.sin(t) ** 2), r)
    if j:
        val += 2 * j * complete_K(k)
    return val


def incomplete_E(k: float, phi: float) -> float:
    """E(k, phi) = int_0^phi sqrt(1 - k^2 sin^2 t) dt."""
    k, phi = _check_k(k), float(phi)
    j, r = _split(phi)
    k2 = k * k
    val = _quad(lambda t: math.sqrt(1.0 - k2 * math.sin(t) ** 2), r)
    if j:
        val += 2 * j * complete_E(k)
    return val


def incomplete_Pi(k: float, l: float, phi: float) -> float:
    """Third kind, Pi(k, l, phi) = int_0^phi dt / ((1 + l sin^2 t) sqrt(1 - k^2 sin^2 t)).

    Note the sign convention: the characteristic enters as 1 + l sin^2.
    """
    k, l, phi = _check_k(k), float(l), float(phi)
    j, r = _split(phi)
    s2max = 1.0 if j else math.sin(r) ** 2
    if 1.0 + l * s2max <= 1e-15:
        raise CharacteristicPole(f"1 + l sin^2 vanishes on the path for l = {l!r}")
    if k == 1.0 and abs(phi) >= math.pi / 2:
        raise DivergentIntegral("Pi(1, l, phi) diverges for |phi| >= pi/2")
    k2 = k * k

    def f(t):
        s2 = math.sin(t) ** 2
        return 1.0 / ((1.0 + l * s2) * math.sqrt(1.0 - k2 * s2))

    val = _quad(f, r)
    if j:
        val += 2 * j * _quad(f, math.pi / 2)
    return val


def _agm_terms(k):
    # a_n, c_n^2 of the AGM started at (1, k'); c_0 = k
    a, b = 1.0, math.sqrt((1.0 - k) * (1.0 + k))
    c2 = [k * k]
    for _ in range(_AGM_MAX_ITER):
        if abs(a - b) <= 1e-16 * a:
            break
        c2.append(0.25 * (a - b) ** 2)
        a, b = 0.5 * (a + b), math.sqrt(a * b)
    return a, c2


def complete_K(k: float) -> float:
    """K(k) = pi / (2 AGM(1, k')). Raises ModulusOne at k = 1."""
    k = _check_k(k)
    if k == 1.0:
        raise ModulusOne("K(k) diverges at k = 1")
    a, _ = _agm_terms(k)
    return math.pi / (2.0 * a)


def complete_E(k: float) -> float:
    """E(k) = K(k) (1 - sum_n 2^(n-1) c_n^2) from the AGM sequence; E(1) = 1."""
    k = _check_k(k)
    if k == 1.0:
        return 1.0
    a, c2 = _agm_terms(k)
    s = sum(2.0 ** (n - 1) * c for n, c in enumerate(c2))
    return math.pi / (2.0 * a) * (1.0 - s)


def _series_coeffs(terms):
    if int(terms) != terms or terms < 1:
        raise DomainError(f"terms must be a positive integer, got {terms!r}")
    c = np.ones(int(terms))
    for n in range(1, int(terms)):
        c[n] = c[n - 1] * (2 * n - 1) / (2 * n)
    return c * c


def series_K(k: float, terms: int) -> float:
    """Partial sum (pi/2) sum_{n<terms} ((2n-1)!!/(2n)!!)^2 k^(2n)."""
    k = _check_k(k)
    c = _series_coeffs(terms)
    powers = k ** (2 * np.arange(c.size))
    return float(math.pi / 2 * np.sum(c * powers))


def series_E(k: float, terms: int) -> float:
    """Partial sum (pi/2) [1 - sum_{1<=n<terms} ((2n-1)!!/(2n)!!)^2 k^(2n)/(2n-1)]."""
    k = _check_k(k)
    c = _series_coeffs(terms)
    n = np.arange(1, c.size)
    return float(math.pi / 2 * (1.0 - np.sum(c[1:] * k ** (2 * n) / (2 * n - 1))))


@dataclass(frozen=True)
class JacobiModulus:
    """Real modulus k with k' = sqrt(1 - k^2) and quarter periods K = F(k), K' = F(k').

    K is inf at k = 1 and K' is inf at k = 0.
    """

    k: float
    k_prime: float
    big_k: float
    big_k_prime: float

    @classmethod
    def from_k(cls, k: float) -> "JacobiModulus":
        k = _check_k(k)
        kp = math.sqrt((1.0 - k) * (1.0 + k))
        big_k = math.inf if k == 1.0 else complete_K(k)
        big_kp = math.inf if kp == 1.0 else complete_K(kp)
        return cls(k, kp, big_k, big_kp)
