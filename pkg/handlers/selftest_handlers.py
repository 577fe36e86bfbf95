"""
Selftest handlers for the weighted contraharmonic mean verifier.
Cross-checks the scalar closed forms against the grid-search oracles.
"""

import argparse
import logging
import math
from dataclasses import dataclass
from typing import List

import numpy as np

import config
from means.scalar_means import (
    MeanKind,
    ScalarPair,
    lehmer_mean,
    scalar_variational_oracle,
    scalar_weighted_mean,
    scalar_weighted_variational_oracle,
)

logger = logging.getLogger(__name__)

FIXTURE_TOL = 1e-12

# (nu or None for the unweighted mean, alpha, beta, expected)
FIXTURES = (
    (None, 3.0, 6.0, 5.0),
    (0.5, 1.0, 3.0, 2.5),
    (1.0 / 3.0, 1.0, 2.0, 3.3),
)

EQUAL_ARGS_WEIGHTS = (0.25, 1.0 / 3.0, 0.5, 2.0 / 3.0)


@dataclass(frozen=True)
class SelftestCheck:
    name: str
    worst: float
    tol: float

    @property
    def passed(self) -> bool:
        return self.worst <= self.tol


def random_pairs(rng: np.random.Generator, count: int) -> List[ScalarPair]:
    lo, hi = config.SELFTEST_RANGE
    values = np.exp(rng.uniform(math.log(lo), math.log(hi), size=(count, 2)))
    return [ScalarPair(float(alpha), float(beta)) for alpha, beta in values]


def _relative(value: float, expected: float) -> float:
    return abs(value - expected) / max(1.0, abs(expected))


def oracle_agreement(pairs: List[ScalarPair]) -> SelftestCheck:
    worst = max((_relative(scalar_variational_oracle(p), lehmer_mean(2, p)) for p in pairs), default=0.0)
    return SelftestCheck("unweighted oracle vs M_2", worst, config.ORACLE_AGREEMENT_TOL)


def weighted_oracle_agreement(pairs: List[ScalarPair], rng: np.random.Generator) -> SelftestCheck:
    lo, hi = config.NU_RANGE
    worst = 0.0
    for p in pairs:
        nu = float(rng.uniform(lo, hi))
        exact = scalar_weighted_mean(MeanKind.CONTRAHARMONIC, nu, p)
        worst = max(worst, _relative(scalar_weighted_variational_oracle(nu, p), exact))
    return SelftestCheck("weighted oracle vs C_nu", worst, config.ORACLE_AGREEMENT_TOL)


def fixture_check() -> SelftestCheck:
    worst = 0.0
    for nu, alpha, beta, expected in FIXTURES:
        p = ScalarPair(alpha, beta)
        value = lehmer_mean(2, p) if nu is None else scalar_weighted_mean(MeanKind.CONTRAHARMONIC, nu, p)
        worst = max(worst, abs(value - expected))
    return SelftestCheck("fixed fixtures", worst, FIXTURE_TOL)


def equal_args_check() -> SelftestCheck:
    worst = 0.0
    for nu in EQUAL_ARGS_WEIGHTS:
        coefficient = (3 * nu ** 2 - 3 * nu + 1) / (nu - nu ** 2)
        value = scalar_weighted_mean(MeanKind.CONTRAHARMONIC, nu, ScalarPair(1.0, 1.0))
        worst = max(worst, abs(value - coefficient))
    return SelftestCheck("C_nu(a, a) / a coefficient", worst, FIXTURE_TOL)


def lehmer_ordering(pairs: List[ScalarPair]) -> SelftestCheck:
    """M_0 <= M_1/2 <= M_1 <= M_2 (harmonic, geometric, arithmetic, contraharmonic)."""
    worst = 0.0
    for p in pairs:
        chain = [lehmer_mean(s, p) for s in (0.0, 0.5, 1.0, 2.0)]
        scale = max(1.0, chain[-1])
        worst = max(worst, max(lower - upper for lower, upper in zip(chain, chain[1:])) / scale)
    return SelftestCheck("Lehmer ordering H <= G <= A <= C", worst, FIXTURE_TOL)


def run_selftest(seed: int = config.DEFAULT_SEED, pairs: int = config.SELFTEST_PAIRS) -> List[SelftestCheck]:
    rng = np.random.default_rng(seed)
    sample = random_pairs(rng, pairs)
    checks = [
        oracle_agreement(sample),
        weighted_oracle_agreement(sample, rng),
        fixture_check(),
        equal_args_check(),
        lehmer_ordering(sample),
    ]
    for check in checks:
        if not check.passed:
            logger.warning(f"Selftest check failed: {check.name} (worst {check.worst:.3e})")
    return checks


def pair_count(text: str) -> int:
    try:
        count = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a whole number, got {text!r}")
    if count < 0:
        raise argparse.ArgumentTypeError(f"pair count must be non-negative, got {count}")
    return count


def register(subparsers) -> None:
    """Add the selftest subcommand."""
    parser = subparsers.add_parser("selftest", help="cross-check scalar closed forms against oracles")
    parser.add_argument("--seed", type=int, default=config.DEFAULT_SEED)
    parser.add_argument("--pairs", type=pair_count, default=config.SELFTEST_PAIRS)
    parser.set_defaults(handler=cmd_selftest)


def cmd_selftest(args: argparse.Namespace) -> int:
    """Handle selftest - one line per check, exit 1 when any check fails."""
    checks = run_selftest(args.seed, args.pairs)
    for check in checks:
        print(config.MESSAGES["selftest_line"].format(
            check=check.name,
            status="PASS" if check.passed else "FAIL",
            worst=check.worst,
        ))
    return 0 if all(check.passed for check in checks) else 1
