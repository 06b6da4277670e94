"""Exception types raised across the package."""


class PNTError(Exception):
    """Base class for computation errors (CLI exit status 1)."""


class DomainError(PNTError, ValueError):
    """Argument outside the mathematical domain of an operation."""


class InsufficientTableError(PNTError):
    """A prime table does not reach far enough for the requested count."""


class PoleError(DomainError):
    """Evaluation requested at the pole s = 1 of zeta."""


class OutOfRegionError(DomainError):
    """Point lies outside the region where the zeta scheme is validated."""


class BranchTrackingError(PNTError):
    """Continuity of a logarithm could not be maintained within budget."""


class NearZeroError(PNTError):
    """|zeta| dropped below threshold on a tracked path."""

    def __init__(self, where: complex, modulus: float):
        self.where = where
        self.modulus = modulus
        super().__init__(f"|zeta(s)| = {modulus:.3e} near s = {where}")


class GeometryError(DomainError):
    """Integration path parameters are inconsistent."""


class IllConditionedError(PNTError):
    """A least-squares fit has no usable spread in its abscissae."""
