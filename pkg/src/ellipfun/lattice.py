"""Period lattices, Eisenstein series and argument reduction."""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from typing import Mapping

import numpy as np

from . import _engine
from .errors import DegenerateLattice, OddOrder, SingularCurve

# Orders cached at construction.
_CACHED_ORDERS = tuple(range(4, 17, 2))


@dataclass(frozen=True)
class _Reduced:
    # u1 = scale, u2 = scale * tau, rows of `matrix` express u1, u2 in (omega1, omega2)
    scale: complex
    tau: complex
    matrix: tuple
    g2n: complex
    g3n: complex
    coeffs: np.ndarray
    eta1n: complex
    eta2n: complex


@dataclass(frozen=True)
class Lattice:
    """The lattice Z*omega1 + Z*omega2 with Im(omega2/omega1) > 0.

    Build instances with :func:`new_lattice`; the constructor does not
    validate anything.
    """

    omega1: complex
    omega2: complex
    g2: complex
    g3: complex
    eisenstein_cache: Mapping[int, complex] = field(default_factory=dict, repr=False, compare=False)
    _red: _Reduced = field(default=None, repr=False, compare=False)

    @property
    def tau(self) -> complex:
        return self.omega2 / self.omega1

    @property
    def discriminant(self) -> complex:
        return self.g2**3 - 27.0 * self.g3**2

    @property
    def reduced_basis(self) -> tuple[complex, complex]:
        """A basis of the same lattice whose ratio lies in the fundamental domain."""
        return self._red.scale, self._red.scale * self._red.tau

    @property
    def shortest_vector(self) -> float:
        return abs(self._red.scale)

    def point(self, m, n):
        return m * self.omega1 + n * self.omega2

    def to_dict(self) -> dict:
        def pair(c):
            return [float(c.real), float(c.imag)]

        return {
            "omega1": pair(self.omega1),
            "omega2": pair(self.omega2),
            "g2": pair(self.g2),
            "g3": pair(self.g3),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: Mapping) -> "Lattice":
        """Rebuild from :meth:`to_dict` output; invariants are recomputed from the periods."""
        return new_lattice(complex(*data["omega1"]), complex(*data["omega2"]))

    @classmethod
    def from_json(cls, text: str) -> "Lattice":
        return cls.from_dict(json.loads(text))


@dataclass(frozen=True)
class ReducedArgument:
    """z = z_reduced + m*omega1 + n*omega2 with z_reduced in the cell centred at 0."""

    z_reduced: complex
    m: int
    n: int


def new_lattice(omega1, omega2) -> Lattice:
    """Validate a pair of periods and precompute the lattice invariants.

    If Im(omega2/omega1) < 0 the two periods are swapped. Raises
    DegenerateLattice when the periods are linearly dependent over R and
    SingularCurve when the discriminant vanishes.
    """
    w1, w2 = complex(omega1), complex(omega2)
    if w1 == 0 or w2 == 0 or not all(map(math.isfinite, (w1.real, w1.imag, w2.real, w2.imag))):
        raise DegenerateLattice(f"periods must be finite and nonzero, got {w1!r}, {w2!r}")
    ratio = w2 / w1
    if abs(ratio.imag) <= 1e-10 * abs(ratio):
        raise DegenerateLattice(f"periods {w1!r} and {w2!r} are R-linearly dependent")
    if ratio.imag < 0:
        w1, w2 = w2, w1

    u1, u2, M = _engine.gauss_reduce(w1, w2)
    tau = u2 / u1
    cache = {}
    for k in _CACHED_ORDERS:
        cache[k] = complex(_engine.eisenstein_normalized(k, tau) / u1**k)
    g2n = 60.0 * _engine.eisenstein_normalized(4, tau)
    g3n = 140.0 * _engine.eisenstein_normalized(6, tau)
    g2 = g2n / u1**4
    g3 = g3n / u1**6
    disc_n = g2n**3 - 27.0 * g3n**2
    if abs(disc_n) <= 1e-12 * max(abs(g2n) ** 3, 27.0 * abs(g3n) ** 2):
        raise SingularCurve(f"discriminant vanishes for periods {w1!r}, {w2!r}")

    coeffs = _engine.laurent_coefficients(g2n, g3n)
    _, _, Z, _ = _engine.evaluate_normalized(coeffs, g2n, np.array([0.5, 0.5 * tau]))
    red = _Reduced(
        scale=u1,
        tau=tau,
        matrix=(tuple(M[0]), tuple(M[1])),
        g2n=complex(g2n),
        g3n=complex(g3n),
        coeffs=coeffs,
        eta1n=complex(2.0 * Z[0]),
        eta2n=complex(2.0 * Z[1]),
    )
    return Lattice(w1, w2, complex(g2), complex(g3), cache, red)


def _check_order(order):
    if isinstance(order, bool) or int(order) != order or order < 4 or order % 2:
        raise OddOrder(f"Eisenstein order must be an even integer >= 4, got {order!r}")
    return int(order)


def eisenstein(lat: Lattice, order: int) -> complex:
    """G_order = sum over nonzero lattice points of omega**-order.

    The double sum is taken row by row: each row of the lattice is summed in
    closed form, which gives the q-expansion and converges geometrically.
    See :func:`eisenstein_shells` for the direct shell-by-shell sum.
    """
    order = _check_order(order)
    if order in lat.eisenstein_cache:
        return lat.eisenstein_cache[order]
    red = lat._red
    return complex(_engine.eisenstein_normalized(order, red.tau) / red.scale**order)


def _shell(k):
    r = np.arange(-k, k + 1)
    inner = np.arange(-k + 1, k)
    m = np.concatenate([r, r, np.full(inner.size, k), np.full(inner.size, -k)])
    n = np.concatenate([np.full(r.size, k), np.full(r.size, -k), inner, inner])
    return m, n


def eisenstein_shells(lat: Lattice, order: int, shells: int | None = None, rtol: float = 1e-14,
                      max_shells: int = 2000, half: bool = False) -> complex:
    """Direct lattice sum of omega**-order over the parallelogram shells max(|m|,|n|) = k.

    With ``shells`` given, exactly that many shells are summed; otherwise
    summation stops once a shell contributes less than ``rtol`` times the
    accumulated absolute sum, or after ``max_shells`` shells. The tail after
    N shells is bounded by 4/(d**order * N**(order-2)) (d the distance from 0
    to the first shell), so low orders converge slowly.

    ``half=True`` sums only the half-lattice (n > 0, or n == 0 and m > 0) and
    doubles it, which must agree with the full sum for even orders.
    """
    order = _check_order(order)
    limit = shells if shells is not None else max_shells
    acc = 0j
    scale = 0.0
    w1, w2 = lat.omega1, lat.omega2
    for k in range(1, limit + 1):
        m, n = _shell(k)
        if half:
            keep = (n > 0) | ((n == 0) & (m > 0))
            m, n = m[keep], n[keep]
        pts = m * w1 + n * w2
        terms = pts ** (-order)
        contrib = terms.sum()
        acc += contrib
        scale += np.abs(terms).sum()
        if shells is None and abs(contrib) < rtol * scale:
            break
    return complex(2.0 * acc) if half else complex(acc)


def shell_tail_bound(lat: Lattice, order: int, shells: int) -> float:
    """Upper bound on |G_order - eisenstein_shells(lat, order, shells)|."""
    m, n = _shell(1)
    d = np.abs(m * lat.omega1 + n * lat.omega2).min()
    # sum_{k>N} 8k / (k d)**order <= 8 / (d**order (order-2) N**(order-2))
    return 8.0 / (d**order * (order - 2) * shells ** (order - 2))


def lattice_coordinates(lat: Lattice, z):
    """Real coordinates (a, b) with z = a*omega1 + b*omega2."""
    z = np.asarray(z, dtype=complex)
    w1, w2 = lat.omega1, lat.omega2
    det = (w1.conjugate() * w2).imag
    a = (z.conjugate() * w2).imag / det
    b = (w1.conjugate() * z).imag / det
    return a, b


def reduce_argument(lat: Lattice, z) -> ReducedArgument:
    """Translate z into the period parallelogram centred at 0 (user basis)."""
    z = complex(z)
    a, b = lattice_coordinates(lat, z)
    m, n = int(np.round(a)), int(np.round(b))
    return ReducedArgument(z - m * lat.omega1 - n * lat.omega2, m, n)
