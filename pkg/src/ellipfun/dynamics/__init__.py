"""Closed-form elliptic solutions of classical integrable systems, with an RK4 oracle."""

from .euler import (
    EulerBranch,
    EulerParams,
    EulerState,
    euler_field,
    euler_invariants,
    euler_top_branch,
    euler_top_modulus,
    euler_top_solution,
    symmetric_top_solution,
)
from .hamiltonian import (
    LaxPair,
    PhaseState,
    family_curve_point,
    family_field,
    family_gradients,
    family_hamiltonian,
    family_invariants,
    family_quartic_curve,
    family_vector_field,
    nls_field,
    nls_lax_matrices,
    nls_spectral_cubic,
    nls_spectral_invariants,
    poisson_bracket,
    quartic_residual,
    spectral_curve_coefficients,
    yang_mills_forward,
    yang_mills_hamiltonian,
    yang_mills_transform,
)
from .integrate import Trajectory, rk4_integrate, rk4_step
from .pendulum import (
    CirculatingParams,
    PendulumParams,
    pendulum_circulating,
    pendulum_energy,
    pendulum_field,
    pendulum_oscillatory,
    pendulum_period,
    pendulum_separatrix,
)
