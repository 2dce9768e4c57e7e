import cmath
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ellipfun import (
    BranchPoint,
    DegenerateSecant,
    Divisor,
    InvalidDivisor,
    NoConvergence,
    PoleAtLatticePoint,
    curve_point,
    elliptic_from_divisor,
    half_period_values,
    invert_wp,
    new_lattice,
    quasi_periods,
    sigma_w,
    wp,
    wp_addition,
    wp_prime,
    wp_prime_addition,
    zeta_w,
)

from _oracles import ThetaWeierstrass, cell_points, random_lattices

LATS = random_lattices(21, 4) + [new_lattice(1, 1j), new_lattice(1.0, 0.3 + 1.7j)]


def rel(a, b):
    return abs(a - b) / max(1.0, abs(b))


@pytest.mark.parametrize("lat", LATS, ids=lambda l: f"{l.omega1:.2f}|{l.omega2:.2f}")
def test_against_theta_oracle(lat):
    o = ThetaWeierstrass(lat.omega1, lat.omega2)
    rng = np.random.default_rng(1)
    for z in cell_points(rng, lat, 8, margin=0.1):
        assert abs(wp(lat, z) - o.wp(z)) <= 1e-9 * abs(o.wp(z))
        assert abs(zeta_w(lat, z) - o.zeta(z)) <= 1e-9 * max(1.0, abs(o.zeta(z)))
        assert abs(sigma_w(lat, z) - o.sigma(z)) <= 1e-8 * abs(o.sigma(z))
    assert abs(quasi_periods(lat).tau1 - complex(o.tau1)) < 1e-10 * max(1.0, abs(o.tau1))


def test_theta_oracle_far_from_cell():
    lat = LATS[0]
    o = ThetaWeierstrass(lat.omega1, lat.omega2)
    z = 0.31 * lat.omega1 - 0.17 * lat.omega2 + 3 * lat.omega1 - 2 * lat.omega2
    assert abs(wp(lat, z) - o.wp(z)) <= 1e-9 * abs(o.wp(z))
    assert abs(sigma_w(lat, z) - o.sigma(z)) <= 1e-6 * abs(o.sigma(z))


def test_half_period_and_derivative_zero():
    lat = new_lattice(1, 1j)
    e = half_period_values(lat)
    assert abs(wp(lat, 0.5) - e.e1) < 1e-12
    for h in (0.5, 0.5j, 0.5 + 0.5j):
        assert abs(wp_prime(lat, h)) < 1e-9
    # square lattice: e2 = -e1, e3 = 0
    assert abs(e.e2 + e.e1) < 1e-10 and abs(e.e3) < 1e-10


@settings(max_examples=100, deadline=None)
@given(st.floats(-0.45, 0.45), st.floats(-0.45, 0.45), st.integers(-5, 5), st.integers(-5, 5))
def test_parity_and_periodicity(a, b, m, n):
    lat = LATS[5]
    z = a * lat.omega1 + b * lat.omega2
    if abs(z) < 0.05:
        return
    w = wp(lat, z)
    assert rel(wp(lat, -z), w) < 1e-10
    assert rel(wp(lat, z + m * lat.omega1 + n * lat.omega2), w) < 1e-10
    assert rel(wp_prime(lat, -z), -wp_prime(lat, z)) < 1e-10
    assert rel(zeta_w(lat, -z), -zeta_w(lat, z)) < 1e-9
    assert rel(sigma_w(lat, -z), -sigma_w(lat, z)) < 1e-8


def test_pole_detection():
    lat = LATS[0]
    for z in (0, lat.omega1, 2 * lat.omega1 - 3 * lat.omega2):
        with pytest.raises(PoleAtLatticePoint):
            wp(lat, z)
        with pytest.raises(PoleAtLatticePoint):
            curve_point(lat, z)
        with pytest.raises(PoleAtLatticePoint):
            zeta_w(lat, z)
    assert sigma_w(lat, 0) == 0
    assert abs(sigma_w(lat, lat.omega1)) < 1e-12


def test_curve_point():
    lat = LATS[1]
    x, y = curve_point(lat, lat.omega1 / 2)
    assert abs(x - half_period_values(lat).e1) < 1e-12 and abs(y) < 1e-9
    rng = np.random.default_rng(2)
    for z in cell_points(rng, lat, 20):
        x, y = curve_point(lat, z)
        assert abs(y * y - (4 * x**3 - lat.g2 * x - lat.g3)) <= 1e-8 * max(1.0, abs(x) ** 3)


def test_laurent_expansion_near_zero():
    lat = LATS[2]
    rs = np.geomspace(1e-3, 1e-2, 8)
    z = rs * cmath.exp(0.7j)
    rest = np.array([wp(lat, x) for x in z]) - 1 / z**2 - lat.g2 / 20 * z**2 - lat.g3 / 28 * z**4
    # remainder is O(z^6) up to the rounding of 1/z^2
    c6 = abs(lat.g2**2 / 1200)
    bound = 2 * c6 * rs**6 + 64 * np.finfo(float).eps / rs**2
    assert np.all(np.abs(rest) <= bound)
    # without the z^4 term the remainder is visibly larger, so the fit is tight
    assert np.abs(rest + lat.g3 / 28 * z**4)[-1] > 100 * np.abs(rest)[-1]


def test_zeta_quasi_periodicity_and_derivative():
    lat = LATS[3]
    q = quasi_periods(lat)
    rng = np.random.default_rng(3)
    for z in cell_points(rng, lat, 5):
        assert abs(zeta_w(lat, z + lat.omega1) - zeta_w(lat, z) - q.tau1) < 1e-9 * max(1.0, abs(q.tau1))
        assert abs(zeta_w(lat, z + lat.omega2) - zeta_w(lat, z) - q.tau2) < 1e-9 * max(1.0, abs(q.tau2))
        h = 1e-5
        d = (zeta_w(lat, z + h) - zeta_w(lat, z - h)) / (2 * h)
        assert abs(d + wp(lat, z)) < 1e-6 * max(1.0, abs(wp(lat, z)))


def test_sigma_quasi_periodicity():
    lat = LATS[0]
    q = quasi_periods(lat)
    rng = np.random.default_rng(4)
    for z in cell_points(rng, lat, 5):
        s = sigma_w(lat, z)
        for w, t in ((lat.omega1, q.tau1), (lat.omega2, q.tau2)):
            expect = -cmath.exp(t * (z + w / 2)) * s
            assert abs(sigma_w(lat, z + w) - expect) < 1e-6 * abs(expect)
    z = 1e-4 * (1 + 1j)
    assert abs(sigma_w(lat, z) / z - 1) < 1e-12


def test_legendre_relation():
    for lat in LATS:
        q = quasi_periods(lat)
        assert abs(q.tau1 * lat.omega2 - q.tau2 * lat.omega1 - 2j * math.pi) < 1e-10


def test_vieta():
    for lat in LATS:
        e1, e2, e3 = half_period_values(lat).as_tuple()
        assert abs(e1 + e2 + e3) < 1e-9 * max(1.0, abs(e1))
        assert abs(e1 * e2 + e2 * e3 + e3 * e1 + lat.g2 / 4) < 1e-9 * max(1.0, abs(lat.g2))
        assert abs(e1 * e2 * e3 - lat.g3 / 4) < 1e-9 * max(1.0, abs(lat.g3))
        assert min(abs(e1 - e2), abs(e2 - e3), abs(e1 - e3)) > 1e-6


def test_addition_laws():
    rng = np.random.default_rng(5)
    for lat in LATS:
        for u, v in zip(cell_points(rng, lat, 10), cell_points(rng, lat, 10)):
            assert rel(wp_addition(lat, u, v), wp(lat, u + v)) < 1e-8
            assert rel(wp_prime_addition(lat, u, v), wp_prime(lat, u + v)) < 1e-8


def test_duplication_path():
    lat = LATS[1]
    u = 0.21 * lat.omega1 + 0.13 * lat.omega2
    assert rel(wp_addition(lat, u, u), wp(lat, 2 * u)) < 1e-8
    assert rel(wp_prime_addition(lat, u, u), wp_prime(lat, 2 * u)) < 1e-8


def test_degenerate_secant():
    lat = LATS[1]
    u = 0.21 * lat.omega1 + 0.13 * lat.omega2
    # wp(-u) = wp(u) but wp'(-u) = -wp'(u): u + v is a lattice point
    with pytest.raises(DegenerateSecant):
        wp_addition(lat, u, -u)
    with pytest.raises(DegenerateSecant):
        wp_prime_addition(lat, u, -u + lat.omega1)


def test_invert_wp():
    rng = np.random.default_rng(6)
    for lat in LATS:
        for z0 in cell_points(rng, lat, 4):
            w = wp(lat, z0)
            z = invert_wp(lat, w)
            assert abs(wp(lat, z) - w) < 1e-8 * max(1.0, abs(w))
        e1 = half_period_values(lat).e1
        z = invert_wp(lat, e1 + 1e-3)
        # near +-omega1/2 modulo the lattice
        dist = min(abs(zz - lat.omega1 / 2 - m * lat.omega1 - n * lat.omega2)
                   for zz in (z, -z) for m in (-1, 0, 1) for n in (-1, 0, 1))
        assert dist < 0.05 * abs(lat.omega1)


def test_invert_wp_branch_point():
    lat = LATS[0]
    for e in half_period_values(lat).as_tuple():
        with pytest.raises(NoConvergence):
            invert_wp(lat, e)
    assert issubclass(BranchPoint, NoConvergence)


def test_divisor_validation():
    lat = LATS[0]
    with pytest.raises(InvalidDivisor):
        elliptic_from_divisor(lat, Divisor([0.1, 0.2], [0.3]))
    with pytest.raises(InvalidDivisor):
        elliptic_from_divisor(lat, Divisor([0.1 + lat.omega1], [0.1]))
    with pytest.raises(InvalidDivisor):
        elliptic_from_divisor(lat, Divisor([0.1, 0.2], [0.3, 0.4]))
    with pytest.raises(InvalidDivisor):
        Divisor([(0.1, 0)], [])


def test_divisor_reproduces_wp_minus_e1():
    lat = LATS[2]
    w1 = lat.omega1
    f = elliptic_from_divisor(lat, Divisor([w1 / 2, -w1 / 2], [(0, 2)]))
    e1 = half_period_values(lat).e1
    rng = np.random.default_rng(7)
    z = cell_points(rng, lat, 20, margin=0.1)
    ratio = f(z) / (wp(lat, z) - e1)
    assert np.max(np.abs(ratio - ratio[0])) < 1e-8 * abs(ratio[0])


def test_divisor_zeros_poles_periodicity():
    lat = LATS[3]
    w1, w2 = lat.omega1, lat.omega2
    a = [0.3 * w1 + 0.1 * w2, -0.2 * w1 + 0.3 * w2, 0.1 * w1 - 0.35 * w2]
    b = [0.25 * w1 - 0.1 * w2, -0.3 * w1 - 0.2 * w2]
    b.append(sum(a) - sum(b) - w2)
    f = elliptic_from_divisor(lat, Divisor(a, b), c=2.0)
    for p in a:
        assert abs(f(p)) < 1e-10
    for p in b:
        assert abs(f(p + 1e-9)) > 1e5
    rng = np.random.default_rng(8)
    z = cell_points(rng, lat, 30)
    fz = f(z)
    for w in (w1, w2, w1 - 2 * w2):
        assert np.max(np.abs(f(z + w) - fz) / np.abs(fz)) < 1e-6


def _cell_contour_integral(f, lat, z0, nodes=400):
    x, wts = np.polynomial.legendre.leggauss(nodes)
    s = 0.5 * (x + 1)
    w1, w2 = lat.omega1, lat.omega2
    corners = [z0, z0 + w1, z0 + w1 + w2, z0 + w2, z0]
    total = 0j
    for p, q in zip(corners[:-1], corners[1:]):
        total += 0.5 * (q - p) * np.sum(wts * f(p + s * (q - p)))
    return total


def test_residue_sum_is_zero():
    lat = LATS[1]
    w1, w2 = lat.omega1, lat.omega2
    z0 = -0.47 * w1 - 0.43 * w2
    f = elliptic_from_divisor(lat, Divisor([0.2 * w1, -0.1 * w2], [0.1 * w1 + 0.05 * w2, 0.1 * w1 - 0.15 * w2]))
    scale = np.abs(f(z0 + 0.5 * w1))
    assert abs(_cell_contour_integral(f, lat, z0)) < 1e-6 * max(1.0, scale)
    assert abs(_cell_contour_integral(lambda z: wp(lat, z), lat, z0)) < 1e-6
