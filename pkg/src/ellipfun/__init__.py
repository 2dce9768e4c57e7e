"""Weierstrass and Jacobi elliptic functions, Legendre elliptic integrals,
and closed-form solutions of the classical integrable systems built on them."""

from . import dynamics
from .errors import *  # noqa: F401,F403
from .integrals import (
    JacobiModulus,
    complete_E,
    complete_K,
    incomplete_E,
    incomplete_F,
    incomplete_Pi,
    series_E,
    series_K,
)
from .jacobi import JacobiTriple, am, jacobi_addition, jacobi_derivatives, jacobi_ode_residuals, jacobi_triple
from .lattice import (
    Lattice,
    ReducedArgument,
    eisenstein,
    eisenstein_shells,
    lattice_coordinates,
    new_lattice,
    reduce_argument,
    shell_tail_bound,
)
from .weierstrass import (
    Divisor,
    DivisorFunction,
    HalfPeriodValues,
    QuasiPeriods,
    curve_point,
    elliptic_from_divisor,
    half_period_values,
    invert_wp,
    quasi_periods,
    sigma_w,
    wp,
    wp_addition,
    wp_prime,
    wp_prime_addition,
    zeta_w,
)

__version__ = "0.1.0"
