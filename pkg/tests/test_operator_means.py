import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from numpy.testing import assert_allclose

from errors import DecompositionInvalid, DimensionMismatch, NotPositiveDefinite, WeightOutOfRange
from harness.generators import gen_decomposition, gen_pd
from means import operator_means as means
from means.hermitian_core import identity, loewner_leq, op_norm, sqrtm
from means.scalar_means import MeanKind, ScalarPair, scalar_weighted_mean
from tests.helpers import diag, scalar


@pytest.mark.parametrize("mean, nu, a, b, expected", [
    (means.arithmetic_mean, 0.25, 4, 8, 5.0),
    (means.harmonic_mean, 0.5, 1, 3, 1.5),
    (means.harmonic_mean, 1.0 / 3.0, 1, 2, 1.2),
    (means.geometric_mean, 0.5, 1, 9, 3.0),
    (means.geometric_mean, 1.0 / 3.0, 1, 8, 2.0),
    (means.contraharmonic_mean, 0.5, 1, 3, 2.5),
    (means.contraharmonic_mean, 1.0 / 3.0, 1, 2, 3.3),
])
def test_one_dimensional_means(mean, nu, a, b, expected):
    assert_allclose(mean(nu, scalar(a), scalar(b)), scalar(expected), atol=1e-12)


@pytest.mark.parametrize("mean", [means.arithmetic_mean, means.harmonic_mean, means.geometric_mean])
def test_means_of_equal_arguments(mean, pd_pair):
    a, _ = pd_pair
    assert_allclose(mean(0.37, a, a), a, atol=1e-10)


def test_commuting_diagonals():
    a, b = diag(1, 3), diag(3, 1)
    assert_allclose(means.arithmetic_mean(0.5, a, b), diag(2, 2), atol=1e-12)
    assert_allclose(means.contraharmonic_mean(0.5, a, b), diag(2.5, 2.5), atol=1e-12)


def test_contraharmonic_of_equal_arguments(pd_pair):
    a, _ = pd_pair
    assert_allclose(means.contraharmonic_mean(1.0 / 3.0, a, a), 1.5 * a, atol=1e-10)


@pytest.mark.parametrize("nu, coefficient, gamma", [
    (0.5, 1.0, 2.0),
    (1.0 / 3.0, 1.5, 2.5),
    (2.0 / 3.0, 1.5, 2.5),
])
def test_coefficients(nu, coefficient, gamma):
    assert means.equal_args_coefficient(nu) == pytest.approx(coefficient, abs=1e-12)
    assert means.gamma_coefficient(nu) == pytest.approx(gamma, abs=1e-12)


def test_mean_params_validation(pd_pair):
    a, b = pd_pair
    params = means.MeanParams.create(0.3, a, b)
    assert params.nu.value == 0.3
    with pytest.raises(WeightOutOfRange):
        means.MeanParams.create(1.0, a, b)
    with pytest.raises(DimensionMismatch):
        means.MeanParams.create(0.3, a, identity(2))
    with pytest.raises(NotPositiveDefinite):
        means.MeanParams.create(0.3, a, -b)


def test_witness_examples(pd_pair):
    pair = means.witness_pair(0.5, scalar(1), scalar(3))
    assert_allclose(pair.z, scalar(0.75), atol=1e-12)
    assert_allclose(pair.w, scalar(0.25), atol=1e-12)

    a, _ = pd_pair
    pair = means.witness_pair(0.3, a, a)
    assert_allclose(pair.z, 0.7 * identity(4), atol=1e-10)
    assert_allclose(pair.w, 0.3 * identity(4), atol=1e-10)


def test_witness_satisfies_constraint(pd_pair):
    a, b = pd_pair
    assert means.witness_pair(0.42, a, b).constraint_residual() <= 1e-10


@pytest.mark.parametrize("x, expected", [(0.75, 2.5), (0.5, 2.0)])
def test_objective_examples(x, expected):
    d = means.Decomposition.from_x(scalar(x))
    assert_allclose(means.objective(0.5, scalar(1), scalar(3), d), scalar(expected), atol=1e-12)


def test_objective_at_boundary_decomposition(pd_pair):
    a, b = pd_pair
    nu = 0.3
    d = means.Decomposition.from_x(identity(4))
    assert_allclose(means.objective(nu, a, b, d), (1 - nu) / nu * b - a, atol=1e-10)


def test_decomposition_must_sum_to_unit():
    d = means.Decomposition(scalar(0.5), scalar(0.6))
    with pytest.raises(DecompositionInvalid):
        d.validate()
    with pytest.raises(DecompositionInvalid):
        means.objective(0.5, scalar(1), scalar(3), d)


def test_residual_h_examples(pd_pair):
    d = means.Decomposition.from_x(scalar(0.5))
    assert abs(means.residual_h(0.5, scalar(1), scalar(3), d)[0, 0]) == pytest.approx(0.5, abs=1e-12)

    a, b = pd_pair
    witness = means.Decomposition.from_x(means.witness_pair(0.6, a, b).z)
    assert op_norm(means.residual_h(0.6, a, b, witness)) <= 1e-9

    equal = means.Decomposition.from_x(0.4 * identity(4))
    assert op_norm(means.residual_h(0.6, a, a, equal)) <= 1e-9


def test_variational_bound_and_gap(pd_pair, rng):
    a, b = pd_pair
    nu = 0.35
    witness = means.witness_pair(nu, a, b)
    for t in (0.0, 0.01, 0.1, 0.5, 1.0):
        d = gen_decomposition(4, witness, rng, t=t)
        assert means.check_variational_bound(nu, a, b, d).holds
        assert means.check_gap_identity(nu, a, b, d).holds


def test_attainment(pd_pair):
    a, b = pd_pair
    report = means.check_attainment(0.8, a, b)
    assert report.holds
    assert report.residual <= 1e-9


def test_gap_is_positive_semidefinite(pd_pair, rng):
    a, b = pd_pair
    d = means.Decomposition.from_x(rng.standard_normal((4, 4)) + 1j * rng.standard_normal((4, 4)))
    gap = means.gap_operator(0.5, a, b, d)
    assert loewner_leq(np.zeros_like(gap), gap).holds


def test_product_identity_scalar():
    assert means.check_product_identity(0.5, scalar(1), scalar(3)).residual <= 1e-12


@pytest.mark.parametrize("dim, nu", [(4, 0.3), (3, 0.7)])
def test_proof_identities_random(rng, dim, nu):
    a, b = gen_pd(dim, 1e3, rng).base, gen_pd(dim, 1e3, rng).base
    assert means.check_product_identity(nu, a, b).residual <= 1e-9
    assert means.check_square_identity(nu, a, b).residual <= 1e-9


def test_square_identity_scalar():
    assert means.check_square_identity(1.0 / 3.0, scalar(1), scalar(2)).residual <= 1e-12
    assert means.check_square_identity(0.5, scalar(5), scalar(5)).residual <= 1e-12


def test_order_chain_and_harmonic_bounds(pd_pair):
    a, b = pd_pair
    for nu in (0.05, 0.5, 0.95):
        assert means.check_order_chain(nu, a, b).holds
        assert means.check_harmonic_bounds(nu, a, b).holds


def test_order_chain_scalar_margin():
    verdict = means.check_order_chain(0.5, scalar(1), scalar(3))
    assert verdict.holds
    assert verdict.margin > 0


@settings(deadline=None, max_examples=50)
@given(
    nu=st.floats(0.05, 0.95),
    entries=st.lists(st.tuples(st.floats(1e-2, 1e2), st.floats(1e-2, 1e2)), min_size=1, max_size=4),
)
def test_diagonal_means_match_scalar_means(nu, entries):
    a = diag(*(alpha for alpha, _ in entries))
    b = diag(*(beta for _, beta in entries))
    for kind, mean in ((MeanKind.HARMONIC, means.harmonic_mean), (MeanKind.GEOMETRIC, means.geometric_mean)):
        expected = [scalar_weighted_mean(kind, nu, ScalarPair(alpha, beta)) for alpha, beta in entries]
        assert_allclose(np.diag(mean(nu, a, b)).real, expected, rtol=1e-12, atol=1e-12)


def test_gap_operator_matches_residual_form(pd_pair, rng):
    a, b = pd_pair
    nu = 0.3
    root = sqrtm(a)
    for t in (0.01, 0.5, 1.0):
        d = gen_decomposition(4, means.witness_pair(nu, a, b), rng, t=t)
        h = means.residual_h(nu, a, b, d)
        expected = root @ h.conj().T @ h @ root / (1 - nu)
        gap = means.gap_operator(nu, a, b, d)
        assert_allclose(gap, expected, atol=1e-9 * max(1.0, op_norm(expected)))


def test_gap_identity_on_ill_conditioned_pair():
    rng = np.random.default_rng(106)
    a, b = gen_pd(4, 1e6, rng).base, gen_pd(4, 1e6, rng).base
    nu = 0.117
    witness = means.witness_pair(nu, a, b)
    for t in (0.0, 0.01, 0.1):
        d = gen_decomposition(4, witness, rng, t=t)
        assert means.check_gap_identity(nu, a, b, d).residual <= 1e-9
