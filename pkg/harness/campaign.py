"""
Fuzz campaigns over every property of the weighted contraharmonic mean.
A campaign walks (dim, property, trial), draws inputs from a per-trial RNG
stream, evaluates the predicate, and records the raw normalized margin.
"""

import logging
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field, replace
from typing import Callable, Dict, List, Optional, Sequence, Tuple

import numpy as np

import config
from errors import CampaignConfigError, ContraharmonicError
from harness.generators import (
    gen_decomposition,
    gen_functional,
    gen_invertible,
    gen_pd,
    gen_positive_scalars,
    gen_weight,
    trial_rng,
)
from means import inequality_suite as suite
from means import operator_means as means
from means.hermitian_core import ComplexMatrix, weakest
from means.inequality_suite import PropertyId
from utils.trial_scheduling import partition_tasks

logger = logging.getLogger(__name__)

ALL_PROPERTIES: Tuple[PropertyId, ...] = tuple(PropertyId)
PROPERTY_INDEX: Dict[PropertyId, int] = {pid: i for i, pid in enumerate(ALL_PROPERTIES)}


@dataclass(frozen=True)
class CampaignConfig:
    """Parameters of one fuzz campaign."""
    dims: Tuple[int, int] = config.DEFAULT_DIMS
    trials: int = config.DEFAULT_TRIALS
    seed: int = config.DEFAULT_SEED
    tol: float = config.DEFAULT_TOL
    nu_range: Tuple[float, float] = config.NU_RANGE
    cond_cap: float = config.DEFAULT_COND_CAP
    properties: Tuple[PropertyId, ...] = ALL_PROPERTIES

    def __post_init__(self):
        lo, hi = self.dims
        if not 1 <= lo <= hi <= config.MAX_DIM:
            raise CampaignConfigError(f"dims {lo}..{hi} must satisfy 1 <= lo <= hi <= {config.MAX_DIM}")
        if self.trials < 0:
            raise CampaignConfigError(f"trials must be non-negative, got {self.trials}")
        if not 0 <= self.seed < 2 ** 64:
            raise CampaignConfigError(f"seed must be a 64-bit unsigned integer, got {self.seed}")
        if not self.tol > 0:
            raise CampaignConfigError(f"tol must be positive, got {self.tol}")
        nu_lo, nu_hi = self.nu_range
        if not 0 < nu_lo <= nu_hi < 1:
            raise CampaignConfigError(f"nu range [{nu_lo}, {nu_hi}] must lie inside (0, 1)")
        if not self.cond_cap >= 1:
            raise CampaignConfigError(f"cond_cap must be >= 1, got {self.cond_cap}")
        object.__setattr__(self, "properties", tuple(PropertyId(p) for p in self.properties))

    def with_extreme_weights(self) -> "CampaignConfig":
        """Widen the weight range to config.NU_EXTREME_RANGE and relax the tolerance."""
        return replace(self, nu_range=config.NU_EXTREME_RANGE, tol=max(self.tol, config.EXTREME_TOL))

    def as_dict(self) -> Dict:
        return {
            "dims": list(self.dims),
            "trials": self.trials,
            "seed": self.seed,
            "tol": self.tol,
            "nu_range": list(self.nu_range),
            "cond_cap": self.cond_cap,
            "properties": [p.value for p in self.properties],
        }


@dataclass(frozen=True)
class PropertyReport:
    """One trial: inputs that vary per property, the raw margin and the verdict."""
    trial: int
    dim: int
    property: PropertyId
    nu: Optional[float]
    mu: Optional[float]
    lam: Optional[float]
    margin: float
    passed: bool


@dataclass
class PropertySummary:
    trials: int = 0
    failures: int = 0
    min_margin: Optional[float] = None

    def add(self, report: PropertyReport) -> None:
        self.trials += 1
        self.failures += 0 if report.passed else 1
        if self.min_margin is None or report.margin < self.min_margin:
            self.min_margin = report.margin


@dataclass
class CampaignResult:
    reports: List[PropertyReport]
    summary: Dict[PropertyId, PropertySummary] = field(default_factory=dict)

    @property
    def total(self) -> int:
        return len(self.reports)

    @property
    def failures(self) -> int:
        return sum(s.failures for s in self.summary.values())

    @property
    def exit_code(self) -> int:
        return 1 if self.failures else 0


@dataclass(frozen=True)
class TrialOutcome:
    margin: float
    mu: Optional[float] = None
    lam: Optional[float] = None


@dataclass(frozen=True)
class TrialInputs:
    rng: np.random.Generator
    dim: int
    nu: float
    a: ComplexMatrix
    b: ComplexMatrix
    cond_cap: float
    nu_range: Tuple[float, float]
    tol: float

    def fresh_pd(self) -> ComplexMatrix:
        return gen_pd(self.dim, self.cond_cap, self.rng).base

    def fresh_weight(self) -> float:
        return gen_weight(self.rng, self.nu_range)

    def sampled_decomposition(self) -> means.Decomposition:
        return gen_decomposition(self.dim, means.witness_pair(self.nu, self.a, self.b), self.rng)


def _symmetry(t: TrialInputs) -> TrialOutcome:
    return TrialOutcome(suite.check_symmetry(t.nu, t.a, t.b, t.tol).margin)


def _homogeneity(t: TrialInputs) -> TrialOutcome:
    r = float(np.exp(t.rng.uniform(math.log(1e-2), math.log(1e2))))
    return TrialOutcome(suite.check_homogeneity(t.nu, t.a, t.b, r, t.tol).margin)


def _scalar_embed(t: TrialInputs) -> TrialOutcome:
    alpha, beta = gen_positive_scalars(t.rng, t.cond_cap)
    return TrialOutcome(suite.check_scalar_embedding(t.nu, t.dim, alpha, beta, t.tol).margin)


def _bounds_remark(t: TrialInputs) -> TrialOutcome:
    return TrialOutcome(weakest(*suite.check_bounds_remark(t.nu, t.a, t.b, t.tol)).margin)


def _convexity_mix(t: TrialInputs) -> TrialOutcome:
    mu = t.fresh_weight()
    c, d = t.fresh_pd(), t.fresh_pd()
    return TrialOutcome(suite.check_convexity_mix(t.nu, mu, t.a, t.b, c, d, t.tol).margin, mu=mu)


def _congruence(t: TrialInputs) -> TrialOutcome:
    z = gen_invertible(t.dim, t.rng)
    return TrialOutcome(suite.check_congruence(t.nu, t.a, t.b, z, t.tol).margin)


def _mixed_mean(t: TrialInputs) -> TrialOutcome:
    mu = t.fresh_weight()
    return TrialOutcome(suite.check_mixed_mean(t.nu, mu, t.a, t.b, t.tol).margin, mu=mu)


def _functional(t: TrialInputs) -> TrialOutcome:
    phi = gen_functional(t.dim, t.rng)
    return TrialOutcome(suite.check_functional(t.nu, t.a, t.b, phi, t.tol).margin)


def _norm_lower(t: TrialInputs) -> TrialOutcome:
    return TrialOutcome(suite.check_norm_lower_bound(t.nu, t.a, t.b, t.tol).margin)


def _lambda_family(t: TrialInputs) -> TrialOutcome:
    lam = float(t.rng.uniform(0.0, 1.0))
    _, verdict = suite.lambda_lower_bound(t.nu, lam, t.a, t.b, t.tol)
    return TrialOutcome(verdict.margin, lam=lam)


def _contraction(t: TrialInputs) -> TrialOutcome:
    return TrialOutcome(weakest(*suite.check_contraction(t.nu, t.a, t.b, t.tol)).margin)


def _refined_upper(t: TrialInputs) -> TrialOutcome:
    return TrialOutcome(suite.check_refined_upper(t.nu, t.a, t.b, t.tol).margin)


def _variational(t: TrialInputs) -> TrialOutcome:
    d = t.sampled_decomposition()
    return TrialOutcome(means.check_variational_bound(t.nu, t.a, t.b, d, t.tol).margin)


def _attainment(t: TrialInputs) -> TrialOutcome:
    return TrialOutcome(means.check_attainment(t.nu, t.a, t.b, t.tol).margin)


def _gap_identity(t: TrialInputs) -> TrialOutcome:
    d = t.sampled_decomposition()
    return TrialOutcome(means.check_gap_identity(t.nu, t.a, t.b, d, t.tol).margin)


def _product_identity(t: TrialInputs) -> TrialOutcome:
    return TrialOutcome(means.check_product_identity(t.nu, t.a, t.b, t.tol).margin)


def _square_identity(t: TrialInputs) -> TrialOutcome:
    return TrialOutcome(means.check_square_identity(t.nu, t.a, t.b, t.tol).margin)


def _order_chain(t: TrialInputs) -> TrialOutcome:
    return TrialOutcome(means.check_order_chain(t.nu, t.a, t.b, t.tol).margin)


def _harmonic_bounds(t: TrialInputs) -> TrialOutcome:
    return TrialOutcome(means.check_harmonic_bounds(t.nu, t.a, t.b, t.tol).margin)


EVALUATORS: Dict[PropertyId, Callable[[TrialInputs], TrialOutcome]] = {
    PropertyId.SYMMETRY: _symmetry,
    PropertyId.HOMOGENEITY: _homogeneity,
    PropertyId.SCALAR_EMBED: _scalar_embed,
    PropertyId.BOUNDS_REMARK: _bounds_remark,
    PropertyId.CONVEXITY_MIX: _convexity_mix,
    PropertyId.CONGRUENCE: _congruence,
    PropertyId.MIXED_MEAN: _mixed_mean,
    PropertyId.FUNCTIONAL: _functional,
    PropertyId.NORM_LOWER: _norm_lower,
    PropertyId.LAMBDA_FAMILY: _lambda_family,
    PropertyId.CONTRACTION: _contraction,
    PropertyId.REFINED_UPPER: _refined_upper,
    PropertyId.VARIATIONAL: _variational,
    PropertyId.ATTAINMENT: _attainment,
    PropertyId.GAP_IDENTITY: _gap_identity,
    PropertyId.PRODUCT_IDENTITY: _product_identity,
    PropertyId.SQUARE_IDENTITY: _square_identity,
    PropertyId.ORDER_CHAIN: _order_chain,
    PropertyId.HARMONIC_BOUNDS: _harmonic_bounds,
}


def evaluate_trial(cfg: CampaignConfig, dim: int, pid: PropertyId, trial: int) -> PropertyReport:
    """Generate inputs for one trial and evaluate its predicate."""
    rng = trial_rng(cfg.seed, dim, PROPERTY_INDEX[pid], trial)
    a = gen_pd(dim, cfg.cond_cap, rng).base
    b = gen_pd(dim, cfg.cond_cap, rng).base
    nu = gen_weight(rng, cfg.nu_range)
    inputs = TrialInputs(rng, dim, nu, a, b, cfg.cond_cap, cfg.nu_range, cfg.tol)
    try:
        outcome = EVALUATORS[pid](inputs)
    except ContraharmonicError as e:
        logger.warning(f"Trial {trial} of {pid.value} (dim {dim}) raised {type(e).__name__}: {e}")
        outcome = TrialOutcome(float("-inf"))
    passed = outcome.margin >= -cfg.tol
    if not passed:
        logger.warning(f"{pid.value} failed at dim {dim}, trial {trial}: margin {outcome.margin:+.3e}")
    return PropertyReport(trial, dim, pid, nu, outcome.mu, outcome.lam, outcome.margin, passed)


def summarize(reports: Sequence[PropertyReport], properties: Sequence[PropertyId],
              tol: Optional[float] = None) -> Dict[PropertyId, PropertySummary]:
    """Per-property counts; a given tol re-applies the pass rule to the raw margins."""
    summary = {PropertyId(p): PropertySummary() for p in properties}
    for report in reports:
        if tol is not None:
            report = replace(report, passed=report.margin >= -tol)
        summary.setdefault(report.property, PropertySummary()).add(report)
    return summary


def rescore(reports: Sequence[PropertyReport], tol: float) -> List[PropertyReport]:
    return [replace(r, passed=r.margin >= -tol) for r in reports]


def _task_cost(task: Tuple[int, int, PropertyId, int]) -> float:
    return float(task[1] ** 3)


def fuzz_campaign(cfg: CampaignConfig, workers: int = config.WORKERS,
                  method: str = config.ASSIGNMENT_METHOD) -> CampaignResult:
    """Run every (dim, property, trial); results come back in that order regardless of workers."""
    lo, hi = cfg.dims
    tasks = [
        (index, dim, pid, trial)
        for index, (dim, pid, trial) in enumerate(
            (dim, pid, trial)
            for dim in range(lo, hi + 1)
            for pid in cfg.properties
            for trial in range(cfg.trials)
        )
    ]
    logger.info(f"Campaign starting: {len(tasks)} trials, seed {cfg.seed}, dims {lo}..{hi}, workers {workers}")

    def run_batch(batch):
        return [(index, evaluate_trial(cfg, dim, pid, trial)) for index, dim, pid, trial in batch]

    reports: List[Optional[PropertyReport]] = [None] * len(tasks)
    if workers <= 1 or len(tasks) <= 1:
        completed = [run_batch(tasks)]
    else:
        batches = partition_tasks(tasks, workers, method, cost=_task_cost)
        with ThreadPoolExecutor(max_workers=len(batches)) as executor:
            completed = list(executor.map(run_batch, batches))
    for batch in completed:
        for index, report in batch:
            reports[index] = report

    result = CampaignResult(reports, summarize(reports, cfg.properties))
    logger.info(f"Campaign finished: {result.total} trials, {result.failures} failures")
    return result
