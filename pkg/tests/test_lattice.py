import cmath
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ellipfun import (
    DegenerateLattice,
    Lattice,
    OddOrder,
    SingularCurve,
    complete_K,
    eisenstein,
    eisenstein_shells,
    lattice_coordinates,
    new_lattice,
    reduce_argument,
    shell_tail_bound,
)

from _oracles import random_lattices


def test_rectangular_lattice_from_quarter_periods():
    k = 0.5
    K, Kp = complete_K(k), complete_K(math.sqrt(1 - k * k))
    lat = new_lattice(2 * K, 2j * Kp)
    # real rectangular lattice: real invariants
    assert abs(lat.g2.imag) < 1e-12 * abs(lat.g2)
    assert abs(lat.g3.imag) < 1e-12 * abs(lat.g3)
    assert lat.g2.real > 0


def test_nearly_dependent_periods_rejected():
    with pytest.raises(DegenerateLattice):
        new_lattice(1, 1.0000001)
    with pytest.raises(DegenerateLattice):
        new_lattice(1, 2)
    with pytest.raises(DegenerateLattice):
        new_lattice(0, 1j)


def test_square_lattice_has_g3_zero():
    lat = new_lattice(1, 1j)
    assert abs(lat.g3) < 1e-10 * abs(lat.g2)


def test_orientation_swap():
    lat = new_lattice(1j, 1)
    assert (lat.omega2 / lat.omega1).imag > 0
    assert {lat.omega1, lat.omega2} == {1j, 1}


def test_singular_curve_is_an_error_class():
    # the discriminant of a genuine lattice never vanishes; the class still exists for callers
    assert issubclass(SingularCurve, ValueError)


def test_eisenstein_square_lattice():
    lat = new_lattice(1, 1j)
    assert abs(eisenstein(lat, 6)) < 1e-12
    g4 = eisenstein(lat, 4)
    assert abs(g4.imag) < 1e-12 and g4.real > 0
    # direct double sum over 200 shells; tail below the shell bound
    direct = eisenstein_shells(lat, 4, shells=200)
    assert abs(g4 - direct) <= shell_tail_bound(lat, 4, 200)
    assert abs(g4 - direct) < 1e-5


def test_eisenstein_odd_order():
    lat = new_lattice(1, 2j)
    for order in (5, 3, 2, 7):
        with pytest.raises(OddOrder):
            eisenstein(lat, order)


@pytest.mark.parametrize("order", [4, 6, 8, 10, 12])
def test_eisenstein_against_shell_sum(order):
    for lat in random_lattices(3, 4):
        ref = eisenstein_shells(lat, order, shells=400)
        bound = shell_tail_bound(lat, order, 400)
        assert abs(eisenstein(lat, order) - ref) <= bound + 1e-12 * abs(ref)


def test_invariants_are_60_g4_and_140_g6():
    for lat in random_lattices(4, 5):
        assert abs(lat.g2 - 60 * eisenstein(lat, 4)) < 1e-12 * abs(lat.g2)
        assert abs(lat.g3 - 140 * eisenstein(lat, 6)) < 1e-12 * max(1.0, abs(lat.g3))


def test_half_lattice_symmetry():
    for lat in random_lattices(5, 3):
        for order in (6, 8):
            full = eisenstein_shells(lat, order, shells=150)
            half = eisenstein_shells(lat, order, shells=150, half=True)
            assert abs(full - half) < 1e-12 * max(1.0, abs(full))


def test_reduce_argument_examples():
    lat = new_lattice(1, 1j)
    r = reduce_argument(lat, 0.25 + 0.25j)
    assert (r.m, r.n) == (0, 0) and abs(r.z_reduced - (0.25 + 0.25j)) < 1e-15
    r = reduce_argument(lat, 1.25 + 0.25j)
    assert (r.m, r.n) == (1, 0) and abs(r.z_reduced - (0.25 + 0.25j)) < 1e-15
    z = -3.6 + 2.2j
    r = reduce_argument(lat, z)
    a, b = lattice_coordinates(lat, r.z_reduced)
    assert abs(a) <= 0.5 and abs(b) <= 0.5
    assert abs(r.z_reduced + r.m * lat.omega1 + r.n * lat.omega2 - z) < 1e-12


@settings(max_examples=200, deadline=None)
@given(st.complex_numbers(max_magnitude=1e3, allow_nan=False, allow_infinity=False))
def test_reduce_argument_reconstruction(z):
    lat = new_lattice(1.3 - 0.2j, 0.4 + 1.1j)
    r = reduce_argument(lat, z)
    a, b = lattice_coordinates(lat, r.z_reduced)
    assert abs(a) <= 0.5 + 1e-12 and abs(b) <= 0.5 + 1e-12
    assert abs(r.z_reduced + r.m * lat.omega1 + r.n * lat.omega2 - z) <= 1e-12 * max(1.0, abs(z))


@settings(max_examples=50, deadline=None)
@given(st.floats(0.2, 5.0), st.floats(-math.pi, math.pi))
def test_homogeneity(r, theta):
    base = new_lattice(1.0, 0.3 + 1.2j)
    s = r * cmath.exp(1j * theta)
    scaled = new_lattice(s * base.omega1, s * base.omega2)
    assert abs(scaled.g2 - s**-4 * base.g2) < 1e-10 * abs(s**-4 * base.g2)
    assert abs(scaled.g3 - s**-6 * base.g3) < 1e-10 * abs(s**-6 * base.g3)


def test_json_round_trip():
    lat = new_lattice(1.0, 0.3 + 1.7j)
    back = Lattice.from_json(lat.to_json())
    assert back.omega1 == lat.omega1 and back.omega2 == lat.omega2
    assert abs(back.g2 - lat.g2) < 1e-15 * abs(lat.g2)
    d = lat.to_dict()
    assert set(d) >= {"omega1", "omega2", "g2", "g3"}
    assert d["omega2"] == [0.3, 1.7]
