import numpy as np
import pytest
from numpy.testing import assert_allclose

import config
from errors import DimensionMismatch, DomainError, NotHermitian, NotPositiveDefinite
from harness.generators import gen_pd
from means.hermitian_core import (
    HermitianPD,
    congruence,
    eig_hermitian,
    identity,
    inverse,
    loewner_leq,
    equality_report,
    matrix_function,
    min_eigenvalue,
    op_norm,
    power,
    sqrt_pair,
    sqrtm,
    weakest,
)
from tests.helpers import diag, scalar


@pytest.mark.parametrize("m, expected", [
    (diag(2, 5), [2.0, 5.0]),
    (np.array([[2, 1], [1, 2]], dtype=complex), [1.0, 3.0]),
    (scalar(7), [7.0]),
])
def test_eig_hermitian_examples(eigen_solver, m, expected):
    spectral = eig_hermitian(m)
    assert_allclose(spectral.eigenvalues, expected, atol=1e-12)
    assert spectral.reconstruction_residual(m) <= config.SPECTRAL_TOL


def test_eig_diagonal_keeps_identity_columns(eigen_solver):
    spectral = eig_hermitian(diag(2, 5))
    assert_allclose(np.abs(spectral.vectors), np.eye(2), atol=1e-12)


@pytest.mark.parametrize("dim", [1, 2, 3, 7, 16])
def test_eig_random_hermitian_reconstructs(eigen_solver, rng, dim):
    g = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
    m = g + g.conj().T
    spectral = eig_hermitian(m)
    assert spectral.reconstruction_residual(m) <= config.SPECTRAL_TOL
    assert spectral.unitarity_residual() <= config.SPECTRAL_TOL
    assert np.all(np.diff(spectral.eigenvalues) >= 0)


def test_jacobi_matches_lapack(rng, monkeypatch):
    a = gen_pd(9, 1e4, rng).base
    monkeypatch.setattr(config, "EIGEN_SOLVER", "jacobi")
    jacobi = eig_hermitian(a).eigenvalues
    monkeypatch.setattr(config, "EIGEN_SOLVER", "lapack")
    lapack = eig_hermitian(a).eigenvalues
    assert_allclose(jacobi, lapack, rtol=1e-10, atol=1e-12)


def test_eig_rejects_non_hermitian():
    with pytest.raises(NotHermitian):
        eig_hermitian(np.array([[1, 2], [0, 1]], dtype=complex))


def test_non_square_input_is_rejected():
    with pytest.raises(DimensionMismatch):
        eig_hermitian(np.ones((2, 3)))


def test_non_finite_input_is_rejected():
    with pytest.raises(DomainError):
        eig_hermitian(diag(1, np.inf))


def test_matrix_functions_on_diagonals():
    assert_allclose(sqrtm(diag(4, 9)), diag(2, 3), atol=1e-12)
    assert_allclose(inverse(diag(2, 4)), diag(0.5, 0.25), atol=1e-12)
    assert_allclose(power(scalar(8), 1.0 / 3.0), scalar(2), atol=1e-12)


def test_sqrt_pair_roots_are_inverse(pd_pair):
    a, _ = pd_pair
    root, inverse_root = sqrt_pair(a)
    assert_allclose(root @ root, a, atol=1e-10)
    assert_allclose(root @ inverse_root, identity(4), atol=1e-10)


def test_positive_domain_is_enforced():
    with pytest.raises(DomainError):
        sqrtm(diag(1, -1))
    # functions defined everywhere accept an indefinite spectrum
    assert_allclose(matrix_function(diag(1, -1), np.abs), identity(2), atol=1e-12)


@pytest.mark.parametrize("m, expected", [
    (identity(3), 1.0),
    (diag(3, -1), 3.0),
    (diag(1, 3), 3.0),
])
def test_op_norm(m, expected):
    assert op_norm(m) == pytest.approx(expected, abs=1e-12)


def test_hermitian_pd_validation():
    assert HermitianPD.from_matrix(diag(1, 2)).n == 2
    with pytest.raises(NotPositiveDefinite):
        HermitianPD.from_matrix(diag(1, -1))
    with pytest.raises(NotPositiveDefinite):
        HermitianPD.from_matrix(diag(1, 0))


def test_loewner_reflexive(pd_pair):
    a, _ = pd_pair
    verdict = loewner_leq(a, a)
    assert verdict.holds
    assert verdict.margin == pytest.approx(0.0, abs=1e-12)


def test_loewner_margins():
    verdict = loewner_leq(diag(1, 2), diag(2, 3))
    assert verdict.holds
    assert verdict.margin == pytest.approx(1.0 / 3.0, abs=1e-12)

    verdict = loewner_leq(identity(2), np.array([[2, 1], [1, 2]], dtype=complex))
    assert verdict.holds
    assert verdict.margin == pytest.approx(0.0, abs=1e-12)


def test_loewner_detects_violation():
    verdict = loewner_leq(diag(2, 3), diag(1, 2))
    assert not verdict.holds
    assert verdict.margin == pytest.approx(-1.0 / 3.0, abs=1e-12)


def test_equality_report_margin_is_negative_residual():
    report = equality_report(diag(1, 2), diag(1, 2.5), tol=1e-9)
    assert report.residual == pytest.approx(0.2)
    assert report.margin == pytest.approx(-0.2)
    assert not report.holds
    assert weakest(report, loewner_leq(diag(1, 2), diag(2, 3))) is report


def test_congruence_examples():
    a = diag(1, 3)
    assert_allclose(congruence(identity(2), a), a)
    assert_allclose(congruence(2 * identity(2), a), diag(4, 12))
    assert_allclose(congruence(diag(1, 0), identity(2)), diag(1, 0))


def test_min_eigenvalue(pd_pair):
    a, _ = pd_pair
    assert min_eigenvalue(a) == pytest.approx(np.linalg.eigvalsh(a)[0], rel=1e-10)


def test_loewner_antisymmetry(rng):
    a = gen_pd(5, 1e3, rng).base
    g = rng.standard_normal((5, 5)) + 1j * rng.standard_normal((5, 5))
    h = (g + g.conj().T) / op_norm(g + g.conj().T)
    both_held = 0
    for eps in (0.0, 1e-14, 1e-12, 1e-6, 1e-2):
        b = a + eps * op_norm(a) * h
        if loewner_leq(a, b, tol=1e-10).holds and loewner_leq(b, a, tol=1e-10).holds:
            both_held += 1
            assert op_norm(a - b) <= 1e-8 * max(1.0, op_norm(a))
    assert both_held >= 1
    assert not loewner_leq(a + 1e-2 * op_norm(a) * identity(5), a, tol=1e-10).holds


def test_congruence_is_linear(rng):
    a, b = gen_pd(4, 1e2, rng).base, gen_pd(4, 1e2, rng).base
    z = rng.standard_normal((4, 4)) + 1j * rng.standard_normal((4, 4))
    combined = congruence(z, 2.5 * a - 0.75 * b)
    assert_allclose(combined, 2.5 * congruence(z, a) - 0.75 * congruence(z, b), atol=1e-10 * op_norm(combined))


def test_inverse_of_inverse(eigen_solver, pd_pair):
    a, _ = pd_pair
    assert_allclose(inverse(inverse(a)), a, atol=1e-10 * op_norm(a))


def test_matrix_function_commutes_with_argument(eigen_solver, pd_pair):
    a, _ = pd_pair
    for f in (np.sqrt, np.log, lambda lam: lam ** 3):
        fa = matrix_function(a, f, require_positive=True)
        assert_allclose(fa @ a, a @ fa, atol=1e-10 * max(1.0, op_norm(fa) * op_norm(a)))
