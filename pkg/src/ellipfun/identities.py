"""Self-check suites: named identities with residuals and pass/fail status.

These are small, deterministic versions of the property tests, meant to
be run from the command line on any install.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass

import numpy as np

from . import dynamics as dyn
from .integrals import complete_E, complete_K, incomplete_E, incomplete_F, series_E, series_K
from .jacobi import jacobi_addition, jacobi_ode_residuals, jacobi_triple
from .lattice import new_lattice
from .weierstrass import (
    Divisor,
    curve_point,
    elliptic_from_divisor,
    half_period_values,
    quasi_periods,
    wp,
    wp_addition,
)

SCOPES = ("weierstrass", "jacobi", "integrals", "dynamics")


@dataclass
class Check:
    name: str
    residual: float
    tol: float

    def __post_init__(self):
        self.residual = float(self.residual)
        self.tol = float(self.tol)

    @property
    def passed(self) -> bool:
        return bool(self.residual <= self.tol)

    def to_dict(self):
        d = asdict(self)
        d["passed"] = self.passed
        return d


def _lattices(rng, n):
    out = []
    while len(out) < n:
        w1 = complex(*rng.uniform(-2, 2, 2))
        w2 = w1 * complex(rng.uniform(-1, 1), rng.uniform(0.6, 2.0))
        if abs(w1) > 0.3:
            out.append(new_lattice(w1, w2))
    return out


def _cell_points(rng, lat, n):
    a, b = rng.uniform(-0.5, 0.5, (2, n))
    z = a * lat.omega1 + b * lat.omega2
    return z[np.abs(z) > 0.05 * lat.shortest_vector]


def weierstrass_suite(tol=None):
    rng = np.random.default_rng(11)
    lats = _lattices(rng, 4)
    checks = []
    worst = 0.0
    for lat in lats:
        z = _cell_points(rng, lat, 60)
        x, y = curve_point(lat, z)
        r = np.abs(y * y - (4 * x**3 - lat.g2 * x - lat.g3)) / np.maximum(1.0, np.abs(x) ** 3)
        worst = max(worst, float(r.max()))
    checks.append(Check("wp ODE residual", worst, tol or 1e-8))
    leg = max(abs((q := quasi_periods(lat)).tau1 * lat.omega2 - q.tau2 * lat.omega1 - 2j * math.pi) for lat in lats)
    checks.append(Check("Legendre relation", float(leg), tol or 1e-10))
    vieta = 0.0
    for lat in lats:
        e1, e2, e3 = half_period_values(lat).as_tuple()
        vieta = max(vieta, abs(e1 + e2 + e3), abs(e1 * e2 + e2 * e3 + e3 * e1 + lat.g2 / 4), abs(e1 * e2 * e3 - lat.g3 / 4))
    checks.append(Check("half-period Vieta identities", float(vieta), tol or 1e-9))
    add = 0.0
    for lat in lats:
        u, v = _cell_points(rng, lat, 20), _cell_points(rng, lat, 20)
        for a, b in zip(u, v):
            direct = wp(lat, a + b)
            add = max(add, abs(wp_addition(lat, a, b) - direct) / max(1.0, abs(direct)))
    checks.append(Check("wp addition law", float(add), tol or 1e-8))
    lat = lats[0]
    w1, w2 = lat.omega1, lat.omega2
    f = elliptic_from_divisor(lat, Divisor([0.3 * w1, 0.1 * w2], [0.2 * w1 + 0.25 * w2, 0.1 * w1 - 0.15 * w2]))
    z = _cell_points(rng, lat, 20)
    fz = f(z)
    per = max(float(np.max(np.abs(f(z + w) - fz) / np.abs(fz))) for w in (w1, w2))
    checks.append(Check("divisor function periodicity", per, tol or 1e-6))
    return checks


def jacobi_suite(tol=None):
    rng = np.random.default_rng(12)
    t = rng.uniform(-10, 10, 1000)
    k = rng.uniform(0, 1, 1000)
    sn, cn, dn = jacobi_triple(t, k)
    ident = max(np.abs(sn**2 + cn**2 - 1).max(), np.abs(dn**2 + k**2 * sn**2 - 1).max())
    checks = [Check("sn^2 + cn^2 = 1, dn^2 + k^2 sn^2 = 1", float(ident), tol or 1e-12)]
    ode = max(float(np.abs(r).max()) for r in jacobi_ode_residuals(t, k))
    checks.append(Check("first-order ODE residuals", ode, tol or 1e-10))
    tau = rng.uniform(-10, 10, 1000)
    s1, c1, d1 = jacobi_addition(t, tau, k)
    s2, c2, d2 = jacobi_triple(t + tau, k)
    add = max(np.abs(s1 - s2).max(), np.abs(c1 - c2).max(), np.abs(d1 - d2).max())
    checks.append(Check("addition theorems", float(add), tol or 1e-10))
    lim0 = jacobi_triple(t, 0.0)
    lim1 = jacobi_triple(t, 1.0)
    deg = max(
        np.abs(lim0.sn - np.sin(t)).max(), np.abs(lim0.cn - np.cos(t)).max(), np.abs(lim0.dn - 1).max(),
        np.abs(lim1.sn - np.tanh(t)).max(), np.abs(lim1.cn - 1 / np.cosh(t)).max(), np.abs(lim1.dn - 1 / np.cosh(t)).max(),
    )
    checks.append(Check("degenerate limits k = 0, 1", float(deg), tol or 1e-12))
    per = 0.0
    for kk in (0.3, 0.7, 0.95):
        K = complete_K(kk)
        a, b = jacobi_triple(t[:50], kk), jacobi_triple(t[:50] + 4 * K, kk)
        per = max(per, float(np.abs(np.subtract(a, b)).max()))
    checks.append(Check("period 4K", per, tol or 1e-10))
    return checks


def integrals_suite(tol=None):
    ks = np.round(np.arange(0.1, 0.95, 0.1), 10)
    leg = 0.0
    quadr = 0.0
    for k in ks:
        kp = math.sqrt(1 - k * k)
        leg = max(leg, abs(complete_E(k) * complete_K(kp) + complete_E(kp) * complete_K(k) - complete_K(k) * complete_K(kp) - math.pi / 2))
        quadr = max(quadr, abs(complete_K(k) - incomplete_F(k, math.pi / 2)), abs(complete_E(k) - incomplete_E(k, math.pi / 2)))
    series = max(max(abs(series_K(k, 20) - complete_K(k)), abs(series_E(k, 20) - complete_E(k))) for k in (0.1, 0.2, 0.3, 0.4, 0.5))
    return [
        Check("Legendre relation EK' + E'K - KK' = pi/2", float(leg), tol or 1e-12),
        Check("AGM vs quadrature", float(quadr), tol or 1e-12),
        Check("AGM vs series (20 terms, k <= 0.5)", float(series), tol or 1e-13),
    ]


def dynamics_suite(tol=None):
    checks = []
    # pendulum: period against an RK4 half-period crossing
    p = dyn.PendulumParams(1.0, 9.81, 1.5)
    T = dyn.pendulum_period(p)
    dt = 1e-4
    tr = dyn.rk4_integrate(dyn.pendulum_field(p.l, p.g), p.initial_state(), dt, int(0.6 * T / dt))
    x = tr.states[:, 0]
    i = int(np.nonzero((x[:-1] > 0) & (x[1:] <= 0))[0][0])
    t_half = tr.times[i] + x[i] / (x[i] - x[i + 1]) * dt
    checks.append(Check("pendulum period vs RK4 crossing", abs(2 * t_half - T) / T, tol or 1e-6))
    # Euler top
    e = dyn.EulerParams.from_state((3.0, 2.0, 1.0), (1.0, 0.0, 0.6))
    ts = np.linspace(0, 5, 201)
    m = dyn.euler_top_solution(e, ts)
    H1, H2 = dyn.euler_invariants(e.lambdas, m)
    cons = max(np.abs(H1 - e.H1).max(), np.abs(2 * H2 - e.r2).max())
    checks.append(Check("Euler top conserved quantities", float(cons), tol or 1e-10))
    # family and NLS
    a, b, c = 0.7, 0.4, 0.1
    s0 = np.array([0.6, -0.2, 0.1, 0.5])
    tr = dyn.rk4_integrate(dyn.family_field(a, b, c), s0, 1e-3, 2000,
                           conserved={"H1": lambda s: dyn.family_invariants(a, b, c, s)[0],
                                      "H2": lambda s: dyn.family_invariants(a, b, c, s)[1]})
    checks.append(Check("family H1, H2 drift (dt=1e-3, t<=2)", max(tr.drift().values()), tol or 1e-9))
    H1s, H2s = dyn.nls_spectral_invariants(s0, 0.3)
    coeffs = dyn.spectral_curve_coefficients(s0, 0.3)
    checks.append(Check("NLS spectral curve coefficients", float(np.abs(coeffs - dyn.nls_spectral_cubic(s0, 0.3)).max()), tol or 1e-8))
    p1, p2, q1 = 0.3, -0.8, 0.4 + 0.9j
    s = dyn.yang_mills_transform(p1, p2, q1, q1.conjugate())
    ym = abs(dyn.yang_mills_hamiltonian(p1, p2, q1, q1.conjugate()) - dyn.family_hamiltonian(0.0, 0.5, 0.0, s))
    checks.append(Check("Yang-Mills Hamiltonian equality", float(ym), tol or 1e-12))
    return checks


SUITES = {
    "weierstrass": weierstrass_suite,
    "jacobi": jacobi_suite,
    "integrals": integrals_suite,
    "dynamics": dynamics_suite,
}


def run_suites(scope: str = "all", tol: float | None = None) -> dict:
    """Run one suite (or all) and return {scope: [check dicts]}."""
    names = SCOPES if scope == "all" else (scope,)
    return {n: [c.to_dict() for c in SUITES[n](tol)] for n in names}
