"""Exception classes raised by the library.

Every error derives from :class:`EllipticError` (itself a ``ValueError``),
so callers can catch the whole family at once. Class names are part of the
public contract: the command-line front end prints them verbatim.
"""


class EllipticError(ValueError):
    """Base class for all domain errors raised by ellipfun."""


class DomainError(EllipticError):
    """An argument lies outside the documented domain."""


# lattice
class DegenerateLattice(EllipticError):
    """The two periods are linearly dependent over the reals."""


class SingularCurve(EllipticError):
    """The discriminant g2**3 - 27*g3**2 vanishes."""


class OddOrder(EllipticError):
    """An Eisenstein series of odd order (or order < 4) was requested."""


# weierstrass
class PoleAtLatticePoint(EllipticError):
    """The argument coincides with a lattice point."""


class DegenerateSecant(EllipticError):
    """The secant through the two curve points is undefined (wp(u) == wp(v))."""


class NoConvergence(EllipticError):
    """An iterative solver failed to converge."""


class BranchPoint(NoConvergence):
    """Inversion requested at a branch point e1, e2 or e3."""


class InvalidDivisor(EllipticError):
    """The divisor cannot be the divisor of an elliptic function."""


# integrals / jacobi
class DivergentIntegral(EllipticError):
    """The elliptic integral diverges on the requested range."""


class CharacteristicPole(EllipticError):
    """1 + l*sin(phi)**2 vanishes on the integration path."""


class ModulusOne(EllipticError):
    """The complete integral K(k) diverges at k = 1."""


class DegenerateDenominator(EllipticError):
    """1 - k**2 sn(t)**2 sn(tau)**2 vanishes in an addition formula."""


# dynamics
class RegimeMismatch(EllipticError):
    """The pendulum parameters belong to a different regime of motion."""


class ParameterDomain(EllipticError):
    """Rigid-body parameters are inadmissible."""


class SpectralPole(EllipticError):
    """The spectral parameter hits the pole h = -a of the Lax matrix."""


class ComplexLeak(EllipticError):
    """A map that should land on real phase space produced complex values."""


class NonFiniteState(EllipticError):
    """An integrated state became infinite or NaN."""
