"""Domain exceptions.

Class names follow the nomenclature of the library surface (no ``Error``
suffix) so that callers can match failures against the documented
operation contracts.
"""

from __future__ import annotations


class BetheError(Exception):
    """Base class for all library-specific failures."""


class UnsupportedType(BetheError):
    """Requested root-system type/realization is not shipped."""


class InvalidLattice(BetheError):
    """Lattice fails containment or integrality requirements."""


class SingularSpectralPoint(BetheError):
    """A cocycle factor hit a pole ((a_vee, lam) equals k_a or a required
    denominator vanished), possibly at an intermediate orbit point."""

    def __init__(self, message: str, at=None, root=None):
        super().__init__(message)
        self.at = at
        self.root = root


class LevelDependentK(BetheError):
    """Closed-form translation product requires level-independent k."""


class OnWall(BetheError):
    """Point lies within tolerance of an affine wall."""

    def __init__(self, message: str, root=None):
        super().__init__(message)
        self.root = root


class NotPositiveLevel(BetheError):
    """Operation requires the d-coefficient (level) to be positive."""


class RelationFailure(BetheError):
    """Supplied generator matrices violate a defining relation."""


class NoConvergence(BetheError):
    """Series parameters outside the convergence regime (Re kappa <= 0)."""


class DomainViolation(BetheError):
    """Spectral parameter outside the stated convergence domain."""

    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


class ParityViolation(BetheError):
    """Steinberg series requires (Y, P) integral (even translation lengths)."""


class NotOnWall(BetheError):
    """Jump check invoked at a point that is not on the wall."""


class WallEnumerationIncomplete(BetheError):
    """Quadrature box touches the level-zero boundary; wall set not finite."""


class NotContinuous(BetheError):
    """Family is not continuous across walls, pairing undefined."""


class ConfigError(BetheError):
    """Run configuration failed validation."""
