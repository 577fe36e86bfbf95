"""
Dense complex matrix plumbing for the weighted contraharmonic mean library.
Hermitian spectral decomposition, matrix functions, norms, and the Loewner order.
"""

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Optional, Tuple, Union

import numpy as np

import config
from errors import (
    DimensionMismatch,
    DomainError,
    NoConvergence,
    NotHermitian,
    NotPositiveDefinite,
)

logger = logging.getLogger(__name__)

# Dense square complex matrix, shape (n, n)
ComplexMatrix = np.ndarray


def as_complex_matrix(m) -> ComplexMatrix:
    """Validate squareness and finiteness and return a complex128 copy."""
    arr = np.array(m, dtype=np.complex128)
    if arr.ndim == 0:
        arr = arr.reshape(1, 1)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or arr.shape[0] < 1:
        raise DimensionMismatch(f"expected a non-empty square matrix, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise DomainError("matrix has non-finite entries")
    return arr


def identity(n: int) -> ComplexMatrix:
    """The unit e of the n x n matrix algebra."""
    return np.eye(n, dtype=np.complex128)


def hermitian_part(m: ComplexMatrix) -> ComplexMatrix:
    """(m + m*) / 2; used on computed results that are Hermitian in exact arithmetic."""
    return 0.5 * (m + m.conj().T)


def op_norm(m: ComplexMatrix) -> float:
    """Largest singular value."""
    return float(np.linalg.norm(np.asarray(m), 2))


def require_same_dim(*matrices: ComplexMatrix) -> int:
    """Return the shared dimension or raise DimensionMismatch."""
    shapes = {np.shape(m) for m in matrices}
    if len(shapes) != 1:
        raise DimensionMismatch(f"operand shapes differ: {sorted(shapes)}")
    shape = shapes.pop()
    if len(shape) != 2 or shape[0] != shape[1]:
        raise DimensionMismatch(f"operands are not square: {shape}")
    return shape[0]


def check_hermitian(m: ComplexMatrix, tol: float = config.HERMITIAN_TOL) -> None:
    """Raise NotHermitian unless ||m - m*|| <= tol * max(1, ||m||)."""
    skew = op_norm(m - m.conj().T)
    scale = max(1.0, op_norm(m))
    if skew > tol * scale:
        raise NotHermitian(f"||m - m*|| = {skew:.3e} exceeds {tol:.1e} * {scale:.3e}")


@dataclass(frozen=True)
class SpectralDecomposition:
    """Ascending real eigenvalues and orthonormal eigenvector columns."""
    eigenvalues: np.ndarray
    vectors: ComplexMatrix

    @property
    def n(self) -> int:
        return len(self.eigenvalues)

    def apply(self, values: np.ndarray) -> ComplexMatrix:
        """V diag(values) V*."""
        return (self.vectors * values) @ self.vectors.conj().T

    def reconstruct(self) -> ComplexMatrix:
        return self.apply(self.eigenvalues)

    def reconstruction_residual(self, m: ComplexMatrix) -> float:
        return op_norm(self.reconstruct() - m) / max(1.0, op_norm(m))

    def unitarity_residual(self) -> float:
        return op_norm(self.vectors.conj().T @ self.vectors - identity(self.n))


@dataclass(frozen=True)
class HermitianPD:
    """A validated Hermitian positive-definite matrix."""
    base: ComplexMatrix

    @classmethod
    def from_matrix(cls, m) -> "HermitianPD":
        arr = as_complex_matrix(m)
        check_hermitian(arr)
        smallest = eig_hermitian(arr).eigenvalues[0]
        if smallest <= 0:
            raise NotPositiveDefinite(f"smallest eigenvalue {smallest:.3e} is not positive")
        return cls(arr)

    @property
    def n(self) -> int:
        return self.base.shape[0]


MatrixLike = Union[ComplexMatrix, HermitianPD]


def unwrap(m: MatrixLike) -> ComplexMatrix:
    return m.base if isinstance(m, HermitianPD) else np.asarray(m, dtype=np.complex128)


@lru_cache(maxsize=None)
def _round_robin_schedule(n: int) -> Tuple[Tuple[np.ndarray, np.ndarray], ...]:
    """Pairings (p, q) of one cyclic sweep, grouped into rounds of disjoint pairs."""
    dummy = n
    players = list(range(n)) + ([dummy] if n % 2 else [])
    size = len(players)
    rounds = []
    for _ in range(size - 1):
        ps, qs = [], []
        for i in range(size // 2):
            p, q = players[i], players[size - 1 - i]
            if dummy in (p, q):
                continue
            ps.append(min(p, q))
            qs.append(max(p, q))
        rounds.append((np.array(ps, dtype=int), np.array(qs, dtype=int)))
        players = [players[0], players[-1]] + players[1:-1]
    return tuple(rounds)


def _off_diagonal_mass(m: ComplexMatrix) -> float:
    mask = ~np.eye(m.shape[0], dtype=bool)
    return float(np.linalg.norm(m[mask]))


def _round_rotation(work: ComplexMatrix, p: np.ndarray, q: np.ndarray) -> ComplexMatrix:
    """Unitary built from disjoint complex Jacobi rotations, zeroing work[p, q]."""
    g = work[p, q]
    app = work[p, p].real
    aqq = work[q, q].real
    mag = np.abs(g)
    active = mag > 0
    safe = np.where(active, mag, 1.0)
    with np.errstate(over="ignore"):
        theta = (aqq - app) / (2.0 * safe)
        t = np.where(theta >= 0, 1.0, -1.0) / (np.abs(theta) + np.sqrt(theta * theta + 1.0))
    t = np.where(active, t, 0.0)
    c = 1.0 / np.sqrt(t * t + 1.0)
    s = t * c
    phase = np.where(active, g / safe, 1.0)

    rotation = identity(work.shape[0])
    rotation[p, p] = c
    rotation[p, q] = s
    rotation[q, p] = -s * np.conj(phase)
    rotation[q, q] = c * np.conj(phase)
    return rotation


def _jacobi_eigh(m: ComplexMatrix) -> SpectralDecomposition:
    n = m.shape[0]
    work = m.copy()
    vectors = identity(n)
    threshold = config.JACOBI_OFFDIAG_TOL * np.linalg.norm(work, "fro")
    schedule = _round_robin_schedule(n)

    for sweep in range(config.JACOBI_MAX_SWEEPS + 1):
        off = _off_diagonal_mass(work)
        if off <= threshold:
            logger.debug(f"Jacobi converged after {sweep} sweeps (n={n}, off={off:.2e})")
            break
        if sweep == config.JACOBI_MAX_SWEEPS:
            raise NoConvergence(
                f"off-diagonal mass {off:.3e} above {threshold:.3e} after {sweep} sweeps"
            )
        for p, q in schedule:
            rotation = _round_rotation(work, p, q)
            work = rotation.conj().T @ work @ rotation
            vectors = vectors @ rotation

    eigenvalues = work.diagonal().real.copy()
    order = np.argsort(eigenvalues, kind="stable")
    spectral = SpectralDecomposition(eigenvalues[order], vectors[:, order])
    residual = spectral.reconstruction_residual(m)
    if residual > config.SPECTRAL_TOL:
        logger.warning(f"Jacobi reconstruction residual {residual:.2e} exceeds {config.SPECTRAL_TOL:.0e} (n={n})")
    return spectral


def eig_hermitian(m: ComplexMatrix) -> SpectralDecomposition:
    """Spectral decomposition of a Hermitian matrix, eigenvalues ascending."""
    arr = as_complex_matrix(m)
    check_hermitian(arr)
    if config.EIGEN_SOLVER == "lapack":
        eigenvalues, vectors = np.linalg.eigh(arr)
        return SpectralDecomposition(eigenvalues, vectors)
    return _jacobi_eigh(arr)


def matrix_function(
    m: MatrixLike,
    f: Callable[[np.ndarray], np.ndarray],
    require_positive: bool = False,
    decomposition: Optional[SpectralDecomposition] = None,
) -> ComplexMatrix:
    """V diag(f(lambda)) V* for Hermitian m.

    require_positive marks f as defined only on (0, inf), e.g. inverses and roots.
    A precomputed decomposition of m may be passed to share one eigensolve.
    """
    spectral = decomposition if decomposition is not None else eig_hermitian(unwrap(m))
    if require_positive and spectral.eigenvalues[0] <= 0:
        raise DomainError(
            f"function needs a positive spectrum, smallest eigenvalue is {spectral.eigenvalues[0]:.3e}"
        )
    with np.errstate(all="ignore"):
        values = np.asarray(f(spectral.eigenvalues), dtype=np.float64)
    if not np.all(np.isfinite(values)):
        raise DomainError("function is not finite on the spectrum")
    return hermitian_part(spectral.apply(values))


def inverse(m: MatrixLike) -> ComplexMatrix:
    return matrix_function(m, lambda lam: 1.0 / lam, require_positive=True)


def sqrtm(m: MatrixLike) -> ComplexMatrix:
    return matrix_function(m, np.sqrt, require_positive=True)


def power(m: MatrixLike, exponent: float) -> ComplexMatrix:
    return matrix_function(m, lambda lam: lam ** exponent, require_positive=True)


def sqrt_pair(m: MatrixLike) -> Tuple[ComplexMatrix, ComplexMatrix]:
    """(m^{1/2}, m^{-1/2}) from a single eigensolve."""
    spectral = eig_hermitian(unwrap(m))
    root = matrix_function(m, np.sqrt, True, spectral)
    inverse_root = matrix_function(m, lambda lam: 1.0 / np.sqrt(lam), True, spectral)
    return root, inverse_root


def min_eigenvalue(m: MatrixLike) -> float:
    return float(eig_hermitian(unwrap(m)).eigenvalues[0])


def congruence(z: ComplexMatrix, a: MatrixLike) -> ComplexMatrix:
    """z* a z."""
    a = unwrap(a)
    require_same_dim(z, a)
    return hermitian_part(z.conj().T @ a @ z)


@dataclass(frozen=True)
class LoewnerVerdict:
    """Outcome of lhs <= rhs: holds and the normalized margin."""
    holds: bool
    margin: float

    @classmethod
    def from_margin(cls, margin: float, tol: float = config.DEFAULT_TOL) -> "LoewnerVerdict":
        return cls(holds=bool(margin >= -tol), margin=float(margin))


@dataclass(frozen=True)
class EqualityReport:
    """Normalized operator-norm residual of an identity; margin is -residual."""
    residual: float
    tol: float = config.DEFAULT_TOL

    @property
    def margin(self) -> float:
        return -self.residual

    @property
    def holds(self) -> bool:
        return self.residual <= self.tol


Verdict = Union[LoewnerVerdict, EqualityReport]


def weakest(*verdicts: Verdict) -> Verdict:
    """The verdict with the smallest margin."""
    return min(verdicts, key=lambda v: v.margin)


def loewner_leq(lhs: MatrixLike, rhs: MatrixLike, tol: float = config.DEFAULT_TOL) -> LoewnerVerdict:
    """Decide lhs <= rhs in the Loewner order."""
    lhs, rhs = unwrap(lhs), unwrap(rhs)
    require_same_dim(lhs, rhs)
    smallest = eig_hermitian(rhs - lhs).eigenvalues[0]
    scale = max(1.0, op_norm(lhs), op_norm(rhs))
    return LoewnerVerdict.from_margin(smallest / scale, tol)


def equality_report(lhs: MatrixLike, rhs: MatrixLike, tol: float = config.DEFAULT_TOL,
                    scale: float = 1.0) -> EqualityReport:
    """||lhs - rhs|| / max(1, scale, ||lhs||, ||rhs||).

    scale is the norm of the largest operand subtracted while forming either side.
    """
    lhs, rhs = unwrap(lhs), unwrap(rhs)
    require_same_dim(lhs, rhs)
    scale = max(1.0, scale, op_norm(lhs), op_norm(rhs))
    return EqualityReport(op_norm(lhs - rhs) / scale, tol)
