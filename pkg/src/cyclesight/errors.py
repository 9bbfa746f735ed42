"""Exception hierarchy shared by all cyclesight modules."""


class CycleSightError(Exception):
    """Base class for all library errors."""


class ZeroMatrix(CycleSightError):
    """Raised when an operation requires a nonzero matrix."""


class NotPSD(CycleSightError):
    """Matrix is not symmetric positive semi-definite."""


class ShiftSingularity(CycleSightError):
    """Shifted matrix M - sigma*I collapsed to zero."""


class TrajectoryError(CycleSightError):
    """A step inside an iteration failed; carries the failing index."""

    def __init__(self, index: int, cause: Exception):
        super().__init__(f"step {index} failed: {cause}")
        self.index = index
        self.cause = cause


class NotOnQuadric(CycleSightError):
    """Homogeneous 5-vector does not satisfy the quadric equation."""


class NullDirection(CycleSightError):
    """Projective point is annihilated by the matrix."""


class NegativeDeterminant(CycleSightError):
    """Operation requires det(M) >= 0."""


class NonNegativeDeterminant(CycleSightError):
    """Operation requires det(M) < 0."""


class DegeneratePoint(CycleSightError):
    """Extracted matrix or point degenerated to zero."""


class PointCycleError(CycleSightError):
    """Angle computations are undefined for point cycles."""


class SingularTransform(CycleSightError):
    """Moebius transformation matrix is not invertible."""


class InvalidGestureForMode(CycleSightError):
    """Gesture does not apply to the session's current figure kind."""


class DegenerateFigure(CycleSightError):
    """Gesture would collapse the figure (tiny radius, merged endpoints)."""
