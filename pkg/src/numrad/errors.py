"""Exception hierarchy shared by all numrad modules."""


class NumradError(Exception):
    """Base class for all domain errors raised by this package."""


class InvalidMatrix(NumradError):
    """Matrix input is not a finite square complex matrix of supported size."""


class DimensionMismatch(NumradError):
    """Operands have incompatible dimensions."""


class DimensionError(NumradError):
    """Matrix file does not describe a square matrix."""


class ParseError(NumradError):
    """Matrix file is malformed or contains non-finite entries."""


class NotHermitian(NumradError):
    """Input to the Hermitian eigensolver is not Hermitian within tolerance."""


class BasisNotOrthonormal(NumradError):
    """Compression basis fails the orthonormality check."""


class ZeroVector(NumradError):
    """A nonzero vector was required."""


class ZeroElement(NumradError):
    """A nonzero algebra element was required."""


class ZeroDirection(NumradError):
    """The approximation direction b must be nonzero."""


class NotPositive(NumradError):
    """A positive (semidefinite) element was required."""


class PreconditionViolated(NumradError):
    """A documented precondition of the operation does not hold."""


class InconsistentRoutes(NumradError):
    """Two independent computational routes disagree beyond tolerance.

    Signals a numerical-tolerance failure of the implementation, not a
    property of the inputs.
    """


class ConvergenceError(NumradError):
    """An iterative kernel failed to converge within its sweep budget."""


class CertificateViolation(NumradError):
    """A numerical certificate that should hold by convexity failed."""
