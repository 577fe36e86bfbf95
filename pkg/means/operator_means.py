"""
Weighted operator means of positive definite matrices.
Arithmetic, harmonic, geometric and contraharmonic means, the variational
objective whose maximum is the contraharmonic mean, its witness pair, the
residual h that measures the gap, and the identities used to prove the maximum.
"""

import logging
from dataclasses import dataclass

import numpy as np

import config
from errors import DecompositionInvalid
from means.hermitian_core import (
    ComplexMatrix,
    EqualityReport,
    HermitianPD,
    LoewnerVerdict,
    MatrixLike,
    congruence,
    eig_hermitian,
    equality_report,
    hermitian_part,
    identity,
    inverse,
    loewner_leq,
    matrix_function,
    op_norm,
    power,
    require_same_dim,
    sqrt_pair,
    unwrap,
    weakest,
)
from means.scalar_means import Weight, as_weight

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class MeanParams:
    """nu in (0, 1) and two positive definite matrices of equal dimension."""
    nu: Weight
    a: HermitianPD
    b: HermitianPD

    @classmethod
    def create(cls, nu, a, b) -> "MeanParams":
        a = a if isinstance(a, HermitianPD) else HermitianPD.from_matrix(a)
        b = b if isinstance(b, HermitianPD) else HermitianPD.from_matrix(b)
        require_same_dim(a.base, b.base)
        return cls(as_weight(nu), a, b)


@dataclass(frozen=True)
class WitnessPair:
    """The maximizing decomposition z + w = e of the variational objective."""
    z: ComplexMatrix
    w: ComplexMatrix

    def constraint_residual(self) -> float:
        e = identity(self.z.shape[0])
        return op_norm(self.z + self.w - e) / max(1.0, op_norm(self.z), op_norm(self.w))


@dataclass(frozen=True)
class Decomposition:
    """A pair (x, y) with x + y = e."""
    x: ComplexMatrix
    y: ComplexMatrix

    @classmethod
    def from_x(cls, x: ComplexMatrix) -> "Decomposition":
        """y = e - x, so the constraint holds exactly."""
        x = np.asarray(x, dtype=np.complex128)
        return cls(x, identity(x.shape[0]) - x)

    def validate(self, tol: float = config.DECOMPOSITION_TOL) -> None:
        require_same_dim(self.x, self.y)
        e = identity(self.x.shape[0])
        residual = op_norm(self.x + self.y - e) / max(1.0, op_norm(self.x), op_norm(self.y))
        if residual > tol:
            raise DecompositionInvalid(f"||x + y - e|| relative residual {residual:.3e} exceeds {tol:.1e}")


def _split(nu):
    w = as_weight(nu)
    return w.value, w.complement


def _ratio(nu) -> float:
    """(1 - nu) / nu, the coefficient that couples b to a in the proofs."""
    v, u = _split(nu)
    return u / v


def arithmetic_mean(nu, a: MatrixLike, b: MatrixLike) -> ComplexMatrix:
    """A_nu(a, b) = (1 - nu) a + nu b."""
    v, u = _split(nu)
    a, b = unwrap(a), unwrap(b)
    require_same_dim(a, b)
    return u * a + v * b


def harmonic_mean(nu, a: MatrixLike, b: MatrixLike) -> ComplexMatrix:
    """H_nu(a, b) = ((1 - nu) a^-1 + nu b^-1)^-1."""
    v, u = _split(nu)
    a, b = unwrap(a), unwrap(b)
    require_same_dim(a, b)
    return inverse(u * inverse(a) + v * inverse(b))


def geometric_mean(nu, a: MatrixLike, b: MatrixLike) -> ComplexMatrix:
    """G_nu(a, b) = a^{1/2} (a^{-1/2} b a^{-1/2})^nu a^{1/2}."""
    v, _ = _split(nu)
    a, b = unwrap(a), unwrap(b)
    require_same_dim(a, b)
    root, inverse_root = sqrt_pair(a)
    inner = congruence(inverse_root, b)
    return congruence(root, power(inner, v))


def contraharmonic_mean(nu, a: MatrixLike, b: MatrixLike) -> ComplexMatrix:
    """C_nu(a, b) = A_nu(b / nu, a / (1 - nu)) - H_nu(a, b)."""
    v, u = _split(nu)
    a, b = unwrap(a), unwrap(b)
    require_same_dim(a, b)
    return hermitian_part(arithmetic_mean(v, b / v, a / u) - harmonic_mean(v, a, b))


def equal_args_coefficient(nu) -> float:
    """C_nu(a, a) = coefficient * a."""
    v, _ = _split(nu)
    return (3 * v ** 2 - 3 * v + 1) / (v - v ** 2)


def gamma_coefficient(nu) -> float:
    """Coefficient of a in the mixed-mean upper bound."""
    v, _ = _split(nu)
    return (2 * v ** 2 - 2 * v + 1) / (v - v ** 2)


def _coupled_inverse(nu, a: ComplexMatrix, b: ComplexMatrix) -> ComplexMatrix:
    """(a + (1 - nu) / nu * b)^-1."""
    return inverse(a + _ratio(nu) * b)


def witness_pair(nu, a: MatrixLike, b: MatrixLike) -> WitnessPair:
    """z = r K^-1 b and w = K^-1 a with r = (1 - nu) / nu and K = a + r b."""
    a, b = unwrap(a), unwrap(b)
    require_same_dim(a, b)
    k_inv = _coupled_inverse(nu, a, b)
    return WitnessPair(z=_ratio(nu) * (k_inv @ b), w=k_inv @ a)


def objective(nu, a: MatrixLike, b: MatrixLike, d: Decomposition) -> ComplexMatrix:
    """(nu a - x*ax) / (1 - nu) + ((1 - nu) b - y*by) / nu."""
    v, u = _split(nu)
    a, b = unwrap(a), unwrap(b)
    require_same_dim(a, b, d.x, d.y)
    d.validate()
    return hermitian_part((v * a - congruence(d.x, a)) / u + (u * b - congruence(d.y, b)) / v)


def _scaled_ratio_operator(nu, a: ComplexMatrix, b: ComplexMatrix):
    """a^{1/2}, a^{-1/2} and T = (1 - nu) / nu * a^{-1/2} b a^{-1/2}."""
    root, inverse_root = sqrt_pair(a)
    return root, inverse_root, _ratio(nu) * congruence(inverse_root, b)


def residual_h(nu, a: MatrixLike, b: MatrixLike, d: Decomposition) -> ComplexMatrix:
    """h = (e + T)^{1/2} a^{1/2} x a^{-1/2} - T (e + T)^{-1/2}; vanishes at the witness."""
    a, b = unwrap(a), unwrap(b)
    require_same_dim(a, b, d.x, d.y)
    d.validate()
    root, inverse_root, t = _scaled_ratio_operator(nu, a, b)
    shifted = identity(a.shape[0]) + t
    spectral = eig_hermitian(shifted)
    shifted_root = matrix_function(shifted, np.sqrt, True, spectral)
    shifted_inverse_root = matrix_function(shifted, lambda lam: 1.0 / np.sqrt(lam), True, spectral)
    return shifted_root @ root @ d.x @ inverse_root - t @ shifted_inverse_root


def gap_operator(nu, a: MatrixLike, b: MatrixLike, d: Decomposition) -> ComplexMatrix:
    """(1 - nu)^-1 a^{1/2} h*h a^{1/2}, the amount objective(x) falls short of C_nu.

    Expanded without a^{+-1/2}: a^{1/2} h*h a^{1/2} = x*Kx - r (x*b + bx) + r^2 b K^-1 b
    with K = a + r b and r = (1 - nu) / nu.
    """
    _, u = _split(nu)
    a, b = unwrap(a), unwrap(b)
    require_same_dim(a, b, d.x, d.y)
    d.validate()
    r = _ratio(nu)
    k = a + r * b
    cross = d.x.conj().T @ b + b @ d.x
    return hermitian_part(congruence(d.x, k) - r * cross + r ** 2 * congruence(b, inverse(k))) / u


def check_variational_bound(nu, a: MatrixLike, b: MatrixLike, d: Decomposition,
                            tol: float = config.DEFAULT_TOL) -> LoewnerVerdict:
    """objective(x) <= C_nu(a, b)."""
    return loewner_leq(objective(nu, a, b, d), contraharmonic_mean(nu, a, b), tol)


def check_attainment(nu, a: MatrixLike, b: MatrixLike, tol: float = config.DEFAULT_TOL) -> EqualityReport:
    """objective(z) = C_nu(a, b) at the witness z."""
    pair = witness_pair(nu, a, b)
    return equality_report(objective(nu, a, b, Decomposition.from_x(pair.z)),
                           contraharmonic_mean(nu, a, b), tol)


def check_gap_identity(nu, a: MatrixLike, b: MatrixLike, d: Decomposition,
                       tol: float = config.DEFAULT_TOL) -> EqualityReport:
    """C_nu(a, b) - objective(x) = (1 - nu)^-1 a^{1/2} h*h a^{1/2}."""
    c = contraharmonic_mean(nu, a, b)
    value = objective(nu, a, b, d)
    scale = max(op_norm(c), op_norm(value))
    return equality_report(c - value, gap_operator(nu, a, b, d), tol, scale=scale)


def check_product_identity(nu, a: MatrixLike, b: MatrixLike, tol: float = config.DEFAULT_TOL) -> EqualityReport:
    """a K^-1 b = nu H_nu(a, b) = b K^-1 a with K = a + (1 - nu) / nu * b."""
    v, _ = _split(nu)
    a, b = unwrap(a), unwrap(b)
    require_same_dim(a, b)
    k_inv = _coupled_inverse(nu, a, b)
    target = v * harmonic_mean(nu, a, b)
    left = equality_report(a @ k_inv @ b, target, tol)
    right = equality_report(b @ k_inv @ a, target, tol)
    return left if left.residual >= right.residual else right


def check_square_identity(nu, a: MatrixLike, b: MatrixLike, tol: float = config.DEFAULT_TOL) -> EqualityReport:
    """T - (e + nu / (1 - nu) a^{1/2} b^-1 a^{1/2})^-1 = (e + T)^{-1/2} T^2 (e + T)^{-1/2}."""
    a, b = unwrap(a), unwrap(b)
    require_same_dim(a, b)
    e = identity(a.shape[0])
    root, _, t = _scaled_ratio_operator(nu, a, b)
    inverse_ratio = congruence(root, inverse(b)) / _ratio(nu)
    lhs = t - inverse(e + inverse_ratio)
    shifted_inverse_root = matrix_function(e + t, lambda lam: 1.0 / np.sqrt(lam), require_positive=True)
    rhs = congruence(shifted_inverse_root, hermitian_part(t @ t))
    return equality_report(lhs, rhs, tol)


def check_order_chain(nu, a: MatrixLike, b: MatrixLike, tol: float = config.DEFAULT_TOL) -> LoewnerVerdict:
    """H_nu <= G_nu <= A_nu(a, b) and A_nu(b, a) <= C_nu(a, b); reports the weakest link."""
    h = harmonic_mean(nu, a, b)
    g = geometric_mean(nu, a, b)
    verdicts = (
        loewner_leq(h, g, tol),
        loewner_leq(g, arithmetic_mean(nu, a, b), tol),
        loewner_leq(arithmetic_mean(nu, b, a), contraharmonic_mean(nu, a, b), tol),
    )
    return weakest(*verdicts)


def check_harmonic_bounds(nu, a: MatrixLike, b: MatrixLike, tol: float = config.DEFAULT_TOL) -> LoewnerVerdict:
    """H_nu(a, b) <= a / (1 - nu) and H_nu(a, b) <= b / nu."""
    v, u = _split(nu)
    a, b = unwrap(a), unwrap(b)
    h = harmonic_mean(nu, a, b)
    return weakest(loewner_leq(h, a / u, tol), loewner_leq(h, b / v, tol))
