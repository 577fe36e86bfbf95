"""
Random instance generation for the fuzz harness.
Every generator draws from an explicit numpy Generator, so a trial is
reproducible from (seed, dim, property, trial) alone.
"""

import logging
import math
from typing import Optional, Sequence, Tuple

import numpy as np

import config
from means.hermitian_core import ComplexMatrix, HermitianPD, hermitian_part
from means.inequality_suite import PositiveFunctional
from means.operator_means import Decomposition, WitnessPair

logger = logging.getLogger(__name__)


def trial_rng(seed: int, dim: int, property_index: int, trial: int) -> np.random.Generator:
    """Independent stream per (seed, dim, property, trial)."""
    return np.random.default_rng([seed, dim, property_index, trial])


def complex_gaussian(rng: np.random.Generator, rows: int, cols: int) -> ComplexMatrix:
    """Entries with independent standard normal real and imaginary parts."""
    return rng.standard_normal((rows, cols)) + 1j * rng.standard_normal((rows, cols))


def haar_unitary(dim: int, rng: np.random.Generator) -> ComplexMatrix:
    """QR of a complex Gaussian with the phases of diag(R) folded back into Q."""
    q, r = np.linalg.qr(complex_gaussian(rng, dim, dim))
    phases = np.diagonal(r) / np.abs(np.diagonal(r))
    return q * phases


def gen_pd(dim: int, cond_cap: float, rng: np.random.Generator) -> HermitianPD:
    """Q diag(lambda) Q* with lambda log-uniform in [cond_cap^-1/2, cond_cap^1/2]."""
    if dim < 1 or cond_cap < 1:
        raise ValueError(f"need dim >= 1 and cond_cap >= 1, got {dim}, {cond_cap}")
    q = haar_unitary(dim, rng)
    half_log = 0.5 * math.log(cond_cap)
    spectrum = np.exp(rng.uniform(-half_log, half_log, dim))
    return HermitianPD(hermitian_part((q * spectrum) @ q.conj().T))


def gen_decomposition(dim: int, witness: WitnessPair, rng: np.random.Generator,
                      t: Optional[float] = None) -> Decomposition:
    """x = (1 - t) z + t g, y = e - x; t drawn from config.INTERPOLATION_WEIGHTS unless given."""
    if t is None:
        t = float(rng.choice(config.INTERPOLATION_WEIGHTS))
    g = complex_gaussian(rng, dim, dim) / math.sqrt(2 * dim)
    return Decomposition.from_x((1.0 - t) * witness.z + t * g)


def gen_weight(rng: np.random.Generator, bounds: Sequence[float] = config.NU_RANGE) -> float:
    lo, hi = bounds
    return float(rng.uniform(lo, hi))


def gen_positive_scalars(rng: np.random.Generator, cond_cap: float, count: int = 2) -> Tuple[float, ...]:
    half_log = 0.5 * math.log(cond_cap)
    return tuple(float(v) for v in np.exp(rng.uniform(-half_log, half_log, count)))


def gen_invertible(dim: int, rng: np.random.Generator, max_condition: float = 1e4) -> ComplexMatrix:
    """Complex Gaussian redrawn until its condition number is at most max_condition."""
    while True:
        z = complex_gaussian(rng, dim, dim) / math.sqrt(2 * dim)
        singular_values = np.linalg.svd(z, compute_uv=False)
        if singular_values[-1] * max_condition >= singular_values[0]:
            return z


def gen_functional(dim: int, rng: np.random.Generator) -> PositiveFunctional:
    """Trace, a rank-one projector, or g*g for complex Gaussian g, with equal probability."""
    kind = int(rng.integers(3))
    if kind == 0:
        return PositiveFunctional.trace(dim)
    if kind == 1:
        v = complex_gaussian(rng, dim, 1)
        return PositiveFunctional.rank_one(v / np.linalg.norm(v))
    g = complex_gaussian(rng, dim, dim)
    return PositiveFunctional(hermitian_part(g.conj().T @ g))
