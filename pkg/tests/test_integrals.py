import math

import mpmath as mp
import numpy as np
import pytest
import scipy.special as sp
from scipy.integrate import quad
from hypothesis import given, settings
from hypothesis import strategies as st

from ellipfun import (
    CharacteristicPole,
    DivergentIntegral,
    DomainError,
    JacobiModulus,
    ModulusOne,
    complete_E,
    complete_K,
    incomplete_E,
    incomplete_F,
    incomplete_Pi,
    series_E,
    series_K,
)

KS = [0.0, 0.1, 0.3, 0.5, 0.7, 0.9, 0.99]


@pytest.mark.parametrize("k", KS)
def test_complete_against_scipy(k):
    assert abs(complete_K(k) - sp.ellipk(k * k)) < 1e-14 * sp.ellipk(k * k)
    assert abs(complete_E(k) - sp.ellipe(k * k)) < 1e-14 * sp.ellipe(k * k)


def test_complete_edge_values():
    assert complete_K(0) == pytest.approx(math.pi / 2, abs=1e-16)
    assert complete_E(0) == pytest.approx(math.pi / 2, abs=1e-16)
    assert complete_E(1) == 1.0
    with pytest.raises(ModulusOne):
        complete_K(1)
    for bad in (-0.1, 1.1, float("nan")):
        with pytest.raises(DomainError):
            complete_K(bad)


def test_K_logarithmic_divergence():
    for kp in (1e-3, 1e-5, 1e-7):
        k = math.sqrt(1 - kp * kp)
        kp = math.sqrt((1 - k) * (1 + k))  # k' of the rounded k
        # K = ln(4/k') + O(k'^2 ln k')
        assert abs(complete_K(k) - math.log(4 / kp)) < 2 * kp * kp * math.log(4 / kp) + 1e-12


@settings(max_examples=200, deadline=None)
@given(st.floats(0, 0.999), st.floats(-20, 20))
def test_incomplete_against_scipy(k, phi):
    m = k * k
    assert abs(incomplete_F(k, phi) - sp.ellipkinc(phi, m)) < 1e-12 * max(1.0, abs(phi))
    assert abs(incomplete_E(k, phi) - sp.ellipeinc(phi, m)) < 1e-12 * max(1.0, abs(phi))


@pytest.mark.parametrize("k,l,phi", [(0.3, 0.5, 0.7), (0.8, -0.6, 1.2), (0.5, 2.0, 4.0), (0.95, -0.3, -2.5), (0.0, 3.0, 1.0)])
def test_Pi_against_mpmath(k, l, phi):
    ref = float(mp.ellippi(-l, phi, k * k))
    assert abs(incomplete_Pi(k, l, phi) - ref) < 1e-10


def test_trivial_cases():
    for phi in (0.0, 0.4, -1.9, 7.0):
        assert incomplete_F(0, phi) == pytest.approx(phi, abs=1e-14)
        assert incomplete_E(0, phi) == pytest.approx(phi, abs=1e-14)
        assert incomplete_Pi(0.6, 0.0, phi) == pytest.approx(incomplete_F(0.6, phi), abs=1e-12)
    for phi in (0.3, 1.0, -1.4):
        assert incomplete_F(1, phi) == pytest.approx(math.atanh(math.sin(phi)), abs=1e-12)
        assert incomplete_F(1, phi) == pytest.approx(math.log(math.tan(phi / 2 + math.pi / 4)), abs=1e-12)
    assert incomplete_F(0.5, math.pi / 2) == pytest.approx(complete_K(0.5), abs=1e-12)
    assert incomplete_E(1, math.pi / 2) == pytest.approx(1.0, abs=1e-12)
    assert incomplete_E(0.7, 0.0) == 0.0
    for l in (0.5, 3.0):
        assert incomplete_Pi(0, l, math.pi / 2) == pytest.approx(math.pi / (2 * math.sqrt(1 + l)), abs=1e-12)


def test_E_against_fixed_quadrature():
    # 200-point Gauss-Legendre on a smooth integrand as an independent oracle
    x, w = np.polynomial.legendre.leggauss(200)
    phi = 0.3
    t = 0.5 * phi * (x + 1)
    ref = 0.5 * phi * np.sum(w * np.sqrt(1 - 0.49 * np.sin(t) ** 2))
    assert abs(incomplete_E(0.7, phi) - ref) < 1e-13
    t = 0.25 * math.pi * (x + 1)
    ref = 0.25 * math.pi * np.sum(w * np.sqrt(1 - 0.09 * np.sin(t) ** 2))
    assert abs(complete_E(0.3) - ref) < 1e-12


def test_errors():
    with pytest.raises(DivergentIntegral):
        incomplete_F(1, math.pi / 2)
    with pytest.raises(DivergentIntegral):
        incomplete_F(1, -3.0)
    with pytest.raises(CharacteristicPole):
        incomplete_Pi(0.5, -2, math.pi / 2)
    with pytest.raises(CharacteristicPole):
        incomplete_Pi(0.5, -1, 2.0)
    # the pole is beyond the path, so this is fine
    assert math.isfinite(incomplete_Pi(0.5, -2, 0.5))
    with pytest.raises(DomainError):
        incomplete_E(1.5, 0.2)


@settings(max_examples=100, deadline=None)
@given(st.floats(0, 0.99), st.floats(-3, 3), st.floats(-3, 3))
def test_odd_and_block_additivity(k, a, b):
    assert incomplete_F(k, -a) == pytest.approx(-incomplete_F(k, a), abs=1e-13)
    K = complete_K(k)
    assert incomplete_F(k, a + math.pi) == pytest.approx(incomplete_F(k, a) + 2 * K, abs=1e-11)
    # joined interval: F(a) + integral over [a, b] = F(b)
    seg = quad(lambda t: 1 / math.sqrt(1 - k * k * math.sin(t) ** 2), a, b, epsabs=1e-13, epsrel=1e-13, limit=200)[0]
    assert incomplete_F(k, a) + seg == pytest.approx(incomplete_F(k, b), abs=1e-11)


def test_E_monotone():
    phis = np.linspace(0, 10, 101)
    vals = [incomplete_E(0.9, p) for p in phis]
    assert np.all(np.diff(vals) > 0)


def test_series_K_E():
    assert series_K(0, 7) == pytest.approx(math.pi / 2, abs=1e-16)
    assert series_E(0, 7) == pytest.approx(math.pi / 2, abs=1e-16)
    assert abs(series_K(0.1, 20) - complete_K(0.1)) < 1e-14
    assert abs(series_E(0.1, 20) - complete_E(0.1)) < 1e-14
    # monotone convergence with per-term ratio bounded by k^2
    k = 0.9
    errK = [complete_K(k) - series_K(k, n) for n in range(2, 12)]
    errE = [series_E(k, n) - complete_E(k) for n in range(2, 12)]
    for err in (errK, errE):
        assert all(e > 0 for e in err)
        ratios = np.array(err[1:]) / np.array(err[:-1])
        assert np.all(ratios <= k * k)


def test_series_matches_first_terms():
    # K = pi/2 (1 + k^2/4 + 9 k^4/64 + ...), E = pi/2 (1 - k^2/4 - 3 k^4/64 - ...)
    k = 0.3
    assert series_K(k, 2) == pytest.approx(math.pi / 2 * (1 + k * k / 4), abs=1e-16)
    assert series_E(k, 3) == pytest.approx(math.pi / 2 * (1 - k * k / 4 - 3 * k**4 / 64), abs=1e-16)


def test_legendre_relation():
    for k in np.round(np.arange(0.1, 0.95, 0.1), 10):
        kp = math.sqrt(1 - k * k)
        lhs = complete_E(k) * complete_K(kp) + complete_E(kp) * complete_K(k) - complete_K(k) * complete_K(kp)
        assert abs(lhs - math.pi / 2) < 1e-12


def test_jacobi_modulus():
    m = JacobiModulus.from_k(0.6)
    assert m.k**2 + m.k_prime**2 == pytest.approx(1.0, abs=1e-16)
    assert m.big_k == pytest.approx(incomplete_F(0.6, math.pi / 2), abs=1e-12)
    assert m.big_k_prime == pytest.approx(complete_K(0.8), abs=1e-14)
    assert math.isinf(JacobiModulus.from_k(1.0).big_k)
