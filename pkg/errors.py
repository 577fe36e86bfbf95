"""
Exceptions raised by the weighted contraharmonic mean library and harness.
"""


class ContraharmonicError(Exception):
    """Base class for every error raised by this project."""


class NotHermitian(ContraharmonicError):
    """A matrix required to be Hermitian fails the relative Hermitian check."""


class NotPositiveDefinite(ContraharmonicError):
    """A Hermitian matrix required to be positive definite has a non-positive eigenvalue."""


class NoConvergence(ContraharmonicError):
    """The Jacobi eigensolver exhausted its sweep budget."""


class DomainError(ContraharmonicError):
    """A matrix function is undefined or non-finite on part of the spectrum."""


class DimensionMismatch(ContraharmonicError):
    """Operands do not share the same square dimension."""


class DecompositionInvalid(ContraharmonicError):
    """A pair (x, y) does not satisfy x + y = e."""


class SingularZ(ContraharmonicError):
    """The congruence factor z is numerically singular."""


class ZeroFunctional(ContraharmonicError):
    """A positive linear functional has a zero weight."""


class LambdaOutOfRange(ContraharmonicError):
    """lambda lies outside [0, 1]."""


class WeightOutOfRange(ContraharmonicError):
    """A weight nu or mu lies outside (0, 1)."""


class MatrixFormatError(ContraharmonicError):
    """A matrix JSON document is malformed."""


class CampaignConfigError(ContraharmonicError):
    """A fuzz campaign configuration violates its invariants."""
