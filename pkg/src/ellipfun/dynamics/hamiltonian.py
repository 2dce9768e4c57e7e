"""Two-degree-of-freedom integrable Hamiltonians on R^4 = {(y1, y2, x1, x2)}.

The family H = (|x|^2 + a rho + b rho^2 + c rho^3) / 2 with rho = |y|^2, its
coupled-NLS member (b = 1/2, c = 0) with a Lax pair, the Yang-Mills
reduction, and a generic Poisson bracket.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, NamedTuple

import numpy as np

from ..errors import ComplexLeak, SpectralPole


class PhaseState(NamedTuple):
    y1: object
    y2: object
    x1: object
    x2: object


def _unpack(s):
    y1, y2, x1, x2 = s
    return y1, y2, x1, x2


# -- the family ---------------------------------------------------------------

def family_hamiltonian(a, b, c, s):
    y1, y2, x1, x2 = _unpack(s)
    rho = y1 * y1 + y2 * y2
    return 0.5 * (x1 * x1 + x2 * x2 + a * rho + b * rho**2 + c * rho**3)


def family_vector_field(a, b, c, s) -> PhaseState:
    """(dy1, dy2, dx1, dx2)/dt: y' = x, x' = -(a + 2 b rho + 3 c rho^2) y."""
    y1, y2, x1, x2 = _unpack(s)
    rho = y1 * y1 + y2 * y2
    f = a + 2.0 * b * rho + 3.0 * c * rho * rho
    return PhaseState(x1, x2, -f * y1, -f * y2)


def family_field(a, b, c):
    """Array form of :func:`family_vector_field` for :func:`rk4_integrate`."""

    def field(s):
        out = np.empty_like(s)
        rho = s[0] * s[0] + s[1] * s[1]
        f = a + (2.0 * b + 3.0 * c * rho) * rho
        out[0] = s[2]
        out[1] = s[3]
        out[2] = -f * s[0]
        out[3] = -f * s[1]
        return out

    return field


def family_invariants(a, b, c, s):
    """(H1, H2) with H1 the Hamiltonian and H2 = x1 y2 - x2 y1 the angular momentum."""
    y1, y2, x1, x2 = _unpack(s)
    return family_hamiltonian(a, b, c, s), x1 * y2 - x2 * y1


def family_quartic_curve(a, b, c, c1, c2):
    """Coefficients (z^4, z^3, z^2, z, 1) of w^2 = -(c z^4 + b z^3 + a z^2 - 2 c1 z + c2^2).

    On the level set H1 = c1, H2 = c2 the point (z, w) = (|y|^2, y.x) lies on this curve.
    """
    return (-c, -b, -a, 2.0 * c1, -(c2 * c2))


def family_curve_point(s):
    """(z, w) = (r^2, r dr/dt) for the state s."""
    y1, y2, x1, x2 = _unpack(s)
    return y1 * y1 + y2 * y2, y1 * x1 + y2 * x2


def quartic_residual(coeffs, z, w):
    return w * w - np.polyval(coeffs, z)


# -- coupled NLS travelling waves ---------------------------------------------

@dataclass(frozen=True)
class LaxPair:
    """A = [[U, V], [W, -U]], B = [[0, 1], [R, 0]] at spectral parameter h."""

    A: np.ndarray
    B: np.ndarray
    h: complex

    def commutator(self) -> np.ndarray:
        """[B, A] = BA - AB, which equals dA/dt along the flow."""
        return self.B @ self.A - self.A @ self.B


def nls_field(a):
    """Flow y'' + (a + |y|^2) y = 0, i.e. the family with b = 1/2, c = 0."""
    return family_field(a, 0.5, 0.0)


def nls_lax_matrices(s, a: float, h: complex) -> LaxPair:
    y1, y2, x1, x2 = map(float, _unpack(s))
    h = complex(h)
    d = a + h
    if abs(d) <= 1e-14 * max(1.0, abs(a)):
        raise SpectralPole(f"h = {h!r} is the pole h = -a of the Lax matrices")
    rho = y1 * y1 + y2 * y2
    U = 0.5 * (x1 * y1 + x2 * y2) / d
    V = -1.0 - rho / (2.0 * d)
    W = 0.5 * (x1 * x1 + x2 * x2) / d - h + 0.5 * rho
    R = h - rho
    A = np.array([[U, V], [W, -U]], dtype=complex)
    B = np.array([[0.0, 1.0], [R, 0.0]], dtype=complex)
    return LaxPair(A, B, h)


def nls_spectral_invariants(s, a: float):
    """(H1, H2) with H2 = a H1 + (x1 y2 - x2 y1)^2 / 4."""
    y1, y2, x1, x2 = _unpack(s)
    H1 = family_hamiltonian(a, 0.5, 0.0, s)
    L = x1 * y2 - x2 * y1
    return H1, a * H1 + 0.25 * L * L


def nls_spectral_cubic(s, a: float):
    """Coefficients (h^3, h^2, h, 1) of w^2 = h^3 + 2a h^2 + (a^2 - H1) h - H2."""
    H1, H2 = nls_spectral_invariants(s, a)
    return (1.0, 2.0 * a, a * a - H1, -H2)


def spectral_curve_coefficients(s, a: float, nodes=(1.0, 2.0, 3.0, 4.0)):
    """Coefficients of -(h + a)^2 det(A_h) as a cubic in h, by interpolation.

    Computed from the Lax matrix alone; it must agree with
    :func:`nls_spectral_cubic`. Since A_h is traceless,
    det(A_h - l I) = l^2 + det(A_h), so these are also the coefficients of
    the characteristic polynomial once scaled by (h + a)^2.
    """
    hs = np.asarray(nodes, dtype=float) - a
    vals = np.array([-(h + a) ** 2 * np.linalg.det(nls_lax_matrices(s, a, h).A) for h in hs])
    coeffs = np.linalg.solve(np.vander(hs, 4), vals)
    return coeffs.real


# -- Yang-Mills reduction -----------------------------------------------------

_YM = 2.0 ** 0.75


def yang_mills_hamiltonian(p1, p2, q1, q2):
    """(p1^2 + p2^2 + q1^2 q2^2) / 2."""
    return 0.5 * (p1 * p1 + p2 * p2 + q1 * q1 * q2 * q2)


def yang_mills_transform(p1, p2, q1, q2) -> PhaseState:
    """Invert p = (x1 +- x2)/sqrt(2), q = 2^(3/4) (y1 +- i y2)/2 for (y1, y2, x1, x2).

    Real (y, x) exist only on the slice q2 = conj(q1); otherwise ComplexLeak.
    """
    q1, q2 = complex(q1), complex(q2)
    y1 = (q1 + q2) / _YM
    y2 = (q1 - q2) / (1j * _YM)
    for name, v in (("y1", y1), ("y2", y2)):
        if abs(v.imag) > 1e-10 * max(1.0, abs(v)):
            raise ComplexLeak(f"{name} = {v!r} is not real; need q2 = conj(q1)")
    x1 = (p1 + p2) / np.sqrt(2.0)
    x2 = (p1 - p2) / np.sqrt(2.0)
    return PhaseState(y1.real, y2.real, float(x1), float(x2))


def yang_mills_forward(s):
    """The map (y, x) -> (p1, p2, q1, q2)."""
    y1, y2, x1, x2 = _unpack(s)
    r = np.sqrt(0.5)
    return r * (x1 + x2), r * (x1 - x2), 0.5 * _YM * (y1 + 1j * y2), 0.5 * _YM * (y1 - 1j * y2)


# -- Poisson bracket ----------------------------------------------------------

def _fd_gradient(f, s, h):
    s = np.asarray(s, dtype=float)
    grad = np.empty(4)
    for i in range(4):
        step = h * max(1.0, abs(s[i]))

        def d(hh):
            e = np.zeros(4)
            e[i] = hh
            return (f(s + e) - f(s - e)) / (2.0 * hh)

        # one Richardson step removes the O(h^2) term
        grad[i] = (4.0 * d(0.5 * step) - d(step)) / 3.0
    return grad


def poisson_bracket(f: Callable, g: Callable, s, grad_f: Callable | None = None,
                    grad_g: Callable | None = None, h: float = 1e-3) -> float:
    """{f, g} = sum_k (df/dx_k dg/dy_k - df/dy_k dg/dx_k) at the state s = (y1, y2, x1, x2).

    Gradients are taken by central differences unless ``grad_f`` /
    ``grad_g`` (returning the 4-vector in state order) are supplied. The
    step is h * max(1, |s_i|); after the Richardson step the error is
    O(h^4) + O(eps/h), smallest near h = 1e-3. A step of 1e-6 leaves
    rounding errors around 1e-7 once |H| reaches a few hundred.
    """
    s = np.asarray(s, dtype=float)
    gf = np.asarray(grad_f(s)) if grad_f else _fd_gradient(f, s, h)
    gg = np.asarray(grad_g(s)) if grad_g else _fd_gradient(g, s, h)
    return float(gf[2] * gg[0] + gf[3] * gg[1] - gf[0] * gg[2] - gf[1] * gg[3])


def family_gradients(a, b, c):
    """Analytic gradients of (H1, H2) for use with :func:`poisson_bracket`."""

    def gH1(s):
        y1, y2, x1, x2 = s
        rho = y1 * y1 + y2 * y2
        f = a + 2.0 * b * rho + 3.0 * c * rho * rho
        return np.array([f * y1, f * y2, x1, x2])

    def gH2(s):
        y1, y2, x1, x2 = s
        return np.array([-x2, x1, y2, -y1])

    return gH1, gH2
