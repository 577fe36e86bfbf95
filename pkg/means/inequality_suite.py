"""
Properties of the weighted contraharmonic mean as margin-reporting predicates.
Each PropertyId names one statement; config.PROPERTY_STATEMENTS holds the table.
"""

import logging
import math
from dataclasses import dataclass
from enum import Enum
from typing import Dict, Optional, Tuple

import numpy as np

import config
from errors import LambdaOutOfRange, NotPositiveDefinite, SingularZ, WeightOutOfRange, ZeroFunctional
from means.hermitian_core import (
    ComplexMatrix,
    EqualityReport,
    LoewnerVerdict,
    MatrixLike,
    congruence,
    eig_hermitian,
    equality_report,
    hermitian_part,
    identity,
    loewner_leq,
    matrix_function,
    min_eigenvalue,
    op_norm,
    require_same_dim,
    sqrtm,
    unwrap,
    weakest,
)
from means.operator_means import (
    Decomposition,
    arithmetic_mean,
    contraharmonic_mean,
    gamma_coefficient,
    objective,
)
from means.scalar_means import MeanKind, ScalarPair, Weight, as_weight, scalar_weighted_mean

logger = logging.getLogger(__name__)


class PropertyId(str, Enum):
    SYMMETRY = "SYMMETRY"
    HOMOGENEITY = "HOMOGENEITY"
    SCALAR_EMBED = "SCALAR_EMBED"
    BOUNDS_REMARK = "BOUNDS_REMARK"
    CONVEXITY_MIX = "CONVEXITY_MIX"
    CONGRUENCE = "CONGRUENCE"
    MIXED_MEAN = "MIXED_MEAN"
    FUNCTIONAL = "FUNCTIONAL"
    NORM_LOWER = "NORM_LOWER"
    LAMBDA_FAMILY = "LAMBDA_FAMILY"
    CONTRACTION = "CONTRACTION"
    REFINED_UPPER = "REFINED_UPPER"
    VARIATIONAL = "VARIATIONAL"
    ATTAINMENT = "ATTAINMENT"
    GAP_IDENTITY = "GAP_IDENTITY"
    PRODUCT_IDENTITY = "PRODUCT_IDENTITY"
    SQUARE_IDENTITY = "SQUARE_IDENTITY"
    ORDER_CHAIN = "ORDER_CHAIN"
    HARMONIC_BOUNDS = "HARMONIC_BOUNDS"

    @property
    def statement(self) -> str:
        return config.PROPERTY_STATEMENTS[self.value]


@dataclass(frozen=True)
class PositiveFunctional:
    """phi(x) = trace(weight x) for a nonzero positive semidefinite weight."""
    weight: ComplexMatrix

    def __post_init__(self):
        weight = np.asarray(self.weight, dtype=np.complex128)
        trace = float(np.trace(weight).real)
        if trace <= 0:
            raise ZeroFunctional(f"weight trace {trace:.3e} is not positive")
        smallest = eig_hermitian(weight).eigenvalues[0]
        if smallest < -config.HERMITIAN_TOL * max(1.0, op_norm(weight)):
            raise NotPositiveDefinite(f"weight has negative eigenvalue {smallest:.3e}")
        object.__setattr__(self, "weight", weight)

    @classmethod
    def trace(cls, n: int) -> "PositiveFunctional":
        return cls(identity(n))

    @classmethod
    def rank_one(cls, vector) -> "PositiveFunctional":
        """x -> <v, x v>."""
        v = np.asarray(vector, dtype=np.complex128).reshape(-1, 1)
        return cls(v @ v.conj().T)

    def __call__(self, x: MatrixLike) -> float:
        return float(np.trace(self.weight @ unwrap(x)).real)


def _contraharmonic_scalar(nu, alpha: float, beta: float) -> float:
    return scalar_weighted_mean(MeanKind.CONTRAHARMONIC, nu, ScalarPair(alpha, beta))


def _scalar_leq(lhs: float, rhs: float, tol: float) -> LoewnerVerdict:
    """lhs <= rhs for reals, normalized the same way as loewner_leq."""
    scale = max(1.0, abs(lhs), abs(rhs))
    return LoewnerVerdict.from_margin((rhs - lhs) / scale, tol)


def check_symmetry(nu, a: MatrixLike, b: MatrixLike, tol: float = config.DEFAULT_TOL) -> EqualityReport:
    """C_nu(a, b) = C_{1-nu}(b, a)."""
    w = as_weight(nu)
    return equality_report(contraharmonic_mean(w, a, b), contraharmonic_mean(w.complement, b, a), tol)


def check_homogeneity(nu, a: MatrixLike, b: MatrixLike, r: float,
                      tol: float = config.DEFAULT_TOL) -> EqualityReport:
    """C_nu(ra, rb) = r C_nu(a, b)."""
    if not r > 0:
        raise ValueError(f"r must be positive, got {r}")
    a, b = unwrap(a), unwrap(b)
    return equality_report(contraharmonic_mean(nu, r * a, r * b), r * contraharmonic_mean(nu, a, b), tol)


def check_scalar_embedding(nu, n: int, alpha: float, beta: float,
                           tol: float = config.DEFAULT_TOL) -> EqualityReport:
    """C_nu(alpha e, beta e) = C_nu(alpha, beta) e."""
    e = identity(n)
    return equality_report(contraharmonic_mean(nu, alpha * e, beta * e),
                           _contraharmonic_scalar(nu, alpha, beta) * e, tol)


def check_homogeneity_and_embedding(nu, a: MatrixLike, b: MatrixLike, r: float, alpha: float, beta: float,
                                    tol: float = config.DEFAULT_TOL) -> Tuple[EqualityReport, EqualityReport]:
    n = require_same_dim(unwrap(a), unwrap(b))
    return check_homogeneity(nu, a, b, r, tol), check_scalar_embedding(nu, n, alpha, beta, tol)


def remark_upper_bound(nu, a: MatrixLike, b: MatrixLike) -> ComplexMatrix:
    """A_nu(b / nu, a / (1 - nu))."""
    w = as_weight(nu)
    return arithmetic_mean(w, unwrap(b) / w.value, unwrap(a) / w.complement)


def check_bounds_remark(nu, a: MatrixLike, b: MatrixLike,
                        tol: float = config.DEFAULT_TOL) -> Tuple[LoewnerVerdict, LoewnerVerdict]:
    """(0 <= C_nu(a, b), C_nu(a, b) <= A_nu(b / nu, a / (1 - nu)))."""
    c = contraharmonic_mean(nu, a, b)
    zero = np.zeros_like(c)
    return loewner_leq(zero, c, tol), loewner_leq(c, remark_upper_bound(nu, a, b), tol)


def check_convexity_mix(nu, mu, a: MatrixLike, b: MatrixLike, c: MatrixLike, d: MatrixLike,
                        tol: float = config.DEFAULT_TOL) -> LoewnerVerdict:
    """C_nu(A_mu(a, b), A_mu(c, d)) <= A_mu(C_nu(a, c), C_nu(b, d))."""
    m = as_weight(mu)
    lhs = contraharmonic_mean(nu, arithmetic_mean(m, a, b), arithmetic_mean(m, c, d))
    rhs = arithmetic_mean(m, contraharmonic_mean(nu, a, c), contraharmonic_mean(nu, b, d))
    return loewner_leq(lhs, rhs, tol)


def require_invertible(z: ComplexMatrix) -> None:
    singular_values = np.linalg.svd(z, compute_uv=False)
    if singular_values[-1] <= config.INVERTIBLE_TOL * singular_values[0]:
        raise SingularZ(f"smallest singular value {singular_values[-1]:.3e} is below "
                        f"{config.INVERTIBLE_TOL:.0e} * {singular_values[0]:.3e}")


def check_congruence(nu, a: MatrixLike, b: MatrixLike, z: ComplexMatrix,
                     tol: float = config.DEFAULT_TOL) -> EqualityReport:
    """C_nu(z*az, z*bz) = z* C_nu(a, b) z for invertible z.

    Both sides subtract a harmonic mean from A_nu(b / nu, a / (1 - nu)); the residual is
    measured against that operand on either side, ||z||^2 ||A_nu(b / nu, a / (1 - nu))|| on the right.
    """
    z = np.asarray(z, dtype=np.complex128)
    require_invertible(z)
    za, zb = congruence(z, a), congruence(z, b)
    lhs = contraharmonic_mean(nu, za, zb)
    scale = max(op_norm(remark_upper_bound(nu, za, zb)), op_norm(z) ** 2 * op_norm(remark_upper_bound(nu, a, b)))
    return equality_report(lhs, congruence(z, contraharmonic_mean(nu, a, b)), tol, scale=scale)


def transport_decomposition(z: ComplexMatrix, d: Decomposition) -> Decomposition:
    """(z x z^-1, z y z^-1); keeps x + y = e."""
    require_invertible(z)
    z_inv = np.linalg.inv(z)
    return Decomposition(z @ d.x @ z_inv, z @ d.y @ z_inv)


def mixed_mean_auxiliary(nu, a: MatrixLike, x: ComplexMatrix) -> ComplexMatrix:
    """a - ax - x*a + x*ax / (1 - nu), positive semidefinite for every x."""
    w = as_weight(nu)
    a = unwrap(a)
    return hermitian_part(a - a @ x - x.conj().T @ a + congruence(x, a) / w.complement)


def check_mixed_mean(nu, mu, a: MatrixLike, b: MatrixLike, tol: float = config.DEFAULT_TOL) -> LoewnerVerdict:
    """C_nu(a, A_mu(a, b)) <= A_mu(gamma a, C_nu(a, b))."""
    m = as_weight(mu)
    a = unwrap(a)
    lhs = contraharmonic_mean(nu, a, arithmetic_mean(m, a, b))
    rhs = arithmetic_mean(m, gamma_coefficient(nu) * a, contraharmonic_mean(nu, a, b))
    return loewner_leq(lhs, rhs, tol)


def functional_witness(nu, a: MatrixLike, b: MatrixLike, phi: PositiveFunctional) -> Decomposition:
    """Scalar decomposition x0 = (1 - nu) phi(b) / phi(nu a + (1 - nu) b) e, y0 = e - x0."""
    w = as_weight(nu)
    a, b = unwrap(a), unwrap(b)
    denominator = phi(w.value * a + w.complement * b)
    x0 = w.complement * phi(b) / denominator
    return Decomposition.from_x(x0 * identity(a.shape[0]))


def check_functional(nu, a: MatrixLike, b: MatrixLike, phi: PositiveFunctional,
                     tol: float = config.DEFAULT_TOL) -> LoewnerVerdict:
    """C_nu(phi(a), phi(b)) <= phi(C_nu(a, b))."""
    lhs = _contraharmonic_scalar(nu, phi(a), phi(b))
    return _scalar_leq(lhs, phi(contraharmonic_mean(nu, a, b)), tol)


def check_functional_witness(nu, a: MatrixLike, b: MatrixLike, phi: PositiveFunctional,
                             tol: float = config.DEFAULT_TOL) -> EqualityReport:
    """phi(objective(x0)) = C_nu(phi(a), phi(b)) at the scalar decomposition x0."""
    value = phi(objective(nu, a, b, functional_witness(nu, a, b, phi)))
    target = _contraharmonic_scalar(nu, phi(a), phi(b))
    return EqualityReport(abs(value - target) / max(1.0, abs(value), abs(target)), tol)


def norm_lower_coefficients(nu, a: MatrixLike, b: MatrixLike, corrected: bool = True) -> Tuple[float, float]:
    """alpha = ||b|| / A_nu(||b||, ||a||); beta = ||a|| / A_nu(||b||, ||a||) when corrected, else alpha."""
    w = as_weight(nu)
    norm_a, norm_b = op_norm(unwrap(a)), op_norm(unwrap(b))
    mean = w.complement * norm_b + w.value * norm_a
    alpha = norm_b / mean
    beta = norm_a / mean if corrected else alpha
    return alpha, beta


def norm_lower_premise(nu, a: MatrixLike, b: MatrixLike) -> Dict[str, float]:
    """|(1 - nu) alpha + nu beta - 1| for the literal (beta = alpha) and the corrected beta."""
    w = as_weight(nu)
    residuals = {}
    for label, corrected in (("literal", False), ("corrected", True)):
        alpha, beta = norm_lower_coefficients(w, a, b, corrected)
        residuals[label] = abs(w.complement * alpha + w.value * beta - 1.0)
    return residuals


def norm_lower_bound(nu, a: MatrixLike, b: MatrixLike, corrected: bool = True) -> ComplexMatrix:
    """A_nu(b / nu, a / (1 - nu)) - A_nu(alpha^2 a, beta^2 b)."""
    alpha, beta = norm_lower_coefficients(nu, a, b, corrected)
    a, b = unwrap(a), unwrap(b)
    return remark_upper_bound(nu, a, b) - arithmetic_mean(nu, alpha ** 2 * a, beta ** 2 * b)


def check_norm_lower_bound(nu, a: MatrixLike, b: MatrixLike, tol: float = config.DEFAULT_TOL) -> LoewnerVerdict:
    return loewner_leq(norm_lower_bound(nu, a, b), contraharmonic_mean(nu, a, b), tol)


def lambda_lower_bound(nu, lam: float, a: MatrixLike, b: MatrixLike,
                       tol: float = config.DEFAULT_TOL) -> Tuple[ComplexMatrix, LoewnerVerdict]:
    """L(lambda) = (nu - l^2) a / (1 - nu) + (2l - l^2 - nu) b / nu and the verdict L <= C_nu."""
    try:
        lam = Weight(float(lam), closed=True).value
    except WeightOutOfRange as e:
        raise LambdaOutOfRange(str(e)) from e
    w = as_weight(nu)
    v, u = w.value, w.complement
    a, b = unwrap(a), unwrap(b)
    bound = (v - lam ** 2) / u * a + (2 * lam - lam ** 2 - v) / v * b
    return bound, loewner_leq(bound, contraharmonic_mean(w, a, b), tol)


def lambda_special_cases(nu, a: MatrixLike, b: MatrixLike) -> Dict[str, float]:
    """Relative residuals of L(lambda) against its displayed closed forms."""
    w = as_weight(nu)
    v, u = w.value, w.complement
    a, b = unwrap(a), unwrap(b)
    closed_forms = {
        "nu": (v, arithmetic_mean(w, b, a)),
        "sqrt_nu": (math.sqrt(v), 2 * (v ** -0.5 - 1) * b),
        "one_minus_sqrt": (1 - math.sqrt(u), 2 * (u ** -0.5 - 1) * a),
    }
    residuals = {}
    for label, (lam, expected) in closed_forms.items():
        bound, _ = lambda_lower_bound(w, lam, a, b)
        residuals[label] = op_norm(bound - expected) / max(1.0, op_norm(expected))
    return residuals


def contraction_witness(nu, a: MatrixLike, b: MatrixLike) -> ComplexMatrix:
    """z = C_nu(a, b)^{-1/2} A_nu(b, a)^{1/2}, a contraction with z* C z = A_nu(b, a)."""
    c = contraharmonic_mean(nu, a, b)
    inverse_root = matrix_function(c, lambda lam: 1.0 / np.sqrt(lam), require_positive=True)
    return inverse_root @ sqrtm(arithmetic_mean(nu, b, a))


def check_contraction(nu, a: MatrixLike, b: MatrixLike,
                      tol: float = config.DEFAULT_TOL) -> Tuple[LoewnerVerdict, EqualityReport]:
    """(||z|| <= 1, z* C_nu z = A_nu(b, a))."""
    z = contraction_witness(nu, a, b)
    norm_verdict = LoewnerVerdict.from_margin(1.0 - op_norm(z), tol)
    reconstruction = equality_report(congruence(z, contraharmonic_mean(nu, a, b)),
                                     arithmetic_mean(nu, b, a), tol)
    return norm_verdict, reconstruction


def refined_upper_bound(nu, a: MatrixLike, b: MatrixLike) -> ComplexMatrix:
    """A_nu(b / nu, a / (1 - nu)) - H_nu(1/||a^-1||, 1/||b^-1||) e; 1/||c^-1|| is lambda_min(c)."""
    shift = scalar_weighted_mean(MeanKind.HARMONIC, nu, ScalarPair(min_eigenvalue(a), min_eigenvalue(b)))
    upper = remark_upper_bound(nu, a, b)
    return upper - shift * identity(upper.shape[0])


def check_refined_upper(nu, a: MatrixLike, b: MatrixLike, tol: float = config.DEFAULT_TOL) -> LoewnerVerdict:
    return loewner_leq(contraharmonic_mean(nu, a, b), refined_upper_bound(nu, a, b), tol)


def verify_all(nu, mu, lam, a: MatrixLike, b: MatrixLike, c: Optional[MatrixLike] = None,
               d: Optional[MatrixLike] = None, z: Optional[ComplexMatrix] = None,
               phi: Optional[PositiveFunctional] = None, r: float = 2.0,
               tol: float = config.DEFAULT_TOL) -> Dict[PropertyId, object]:
    """Evaluate the inequality-suite predicates on one fixed instance.

    Missing c, d default to b, a; z to e; phi to the trace; (alpha, beta) to (lambda_min(a), lambda_min(b)).
    """
    a, b = unwrap(a), unwrap(b)
    n = require_same_dim(a, b)
    c = b if c is None else unwrap(c)
    d = a if d is None else unwrap(d)
    z = identity(n) if z is None else np.asarray(z, dtype=np.complex128)
    phi = PositiveFunctional.trace(n) if phi is None else phi

    homogeneity, embedding = check_homogeneity_and_embedding(
        nu, a, b, r, min_eigenvalue(a), min_eigenvalue(b), tol)
    results = {
        PropertyId.SYMMETRY: check_symmetry(nu, a, b, tol),
        PropertyId.HOMOGENEITY: homogeneity,
        PropertyId.SCALAR_EMBED: embedding,
        PropertyId.BOUNDS_REMARK: weakest(*check_bounds_remark(nu, a, b, tol)),
        PropertyId.CONVEXITY_MIX: check_convexity_mix(nu, mu, a, b, c, d, tol),
        PropertyId.CONGRUENCE: check_congruence(nu, a, b, z, tol),
        PropertyId.MIXED_MEAN: check_mixed_mean(nu, mu, a, b, tol),
        PropertyId.FUNCTIONAL: check_functional(nu, a, b, phi, tol),
        PropertyId.NORM_LOWER: check_norm_lower_bound(nu, a, b, tol),
        PropertyId.LAMBDA_FAMILY: lambda_lower_bound(nu, lam, a, b, tol)[1],
        PropertyId.CONTRACTION: weakest(*check_contraction(nu, a, b, tol)),
        PropertyId.REFINED_UPPER: check_refined_upper(nu, a, b, tol),
    }
    failed = [pid.value for pid, verdict in results.items() if not verdict.holds]
    if failed:
        logger.warning(f"Predicates failed on the supplied instance: {', '.join(failed)}")
    return results
