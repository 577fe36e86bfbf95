"""
Scalar means: the Gini-Beckenbach-Lehmer family, the weighted scalar means,
and grid-search oracles for the variational form of the contraharmonic mean.
The oracles never use the closed forms, so they cross-check them independently.
"""

import math
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Tuple

import numpy as np

import config
from errors import WeightOutOfRange


class MeanKind(str, Enum):
    ARITHMETIC = "arithmetic"
    HARMONIC = "harmonic"
    GEOMETRIC = "geometric"
    CONTRAHARMONIC = "contraharmonic"


@dataclass(frozen=True)
class ScalarPair:
    """Two strictly positive finite scalars (alpha, beta)."""
    alpha: float
    beta: float

    def __post_init__(self):
        for name, value in (("alpha", self.alpha), ("beta", self.beta)):
            if not (math.isfinite(value) and value > 0):
                raise ValueError(f"{name} must be positive and finite, got {value}")

    def swapped(self) -> "ScalarPair":
        return ScalarPair(self.beta, self.alpha)


@dataclass(frozen=True)
class Weight:
    """A weight in (0, 1); closed=True relaxes the bounds to [0, 1] (used for lambda)."""
    value: float
    closed: bool = False

    def __post_init__(self):
        if not math.isfinite(self.value):
            raise WeightOutOfRange(f"weight must be finite, got {self.value}")
        if self.closed:
            ok = 0.0 <= self.value <= 1.0
        else:
            ok = 0.0 < self.value < 1.0
        if not ok:
            bounds = "[0, 1]" if self.closed else "(0, 1)"
            raise WeightOutOfRange(f"weight {self.value} outside {bounds}")

    @property
    def complement(self) -> float:
        return 1.0 - self.value


def as_weight(nu) -> Weight:
    return nu if isinstance(nu, Weight) else Weight(float(nu))


def lehmer_mean(s: float, p: ScalarPair) -> float:
    """M_s(alpha, beta) = (alpha^s + beta^s) / (alpha^(s-1) + beta^(s-1))."""
    return (p.alpha ** s + p.beta ** s) / (p.alpha ** (s - 1) + p.beta ** (s - 1))


def scalar_weighted_mean(kind: MeanKind, nu, p: ScalarPair) -> float:
    """One-dimensional specialization of the weighted operator means."""
    w = as_weight(nu)
    v, u = w.value, w.complement
    kind = MeanKind(kind)
    if kind is MeanKind.ARITHMETIC:
        return u * p.alpha + v * p.beta
    if kind is MeanKind.HARMONIC:
        return 1.0 / (u / p.alpha + v / p.beta)
    if kind is MeanKind.GEOMETRIC:
        return p.alpha ** u * p.beta ** v
    harmonic = 1.0 / (u / p.alpha + v / p.beta)
    return (u / v) * p.beta + (v / u) * p.alpha - harmonic


def scalar_contraharmonic_split(p: ScalarPair) -> Tuple[float, float]:
    """Both sides of C(alpha, beta) = A(2 beta, 2 alpha) - H(alpha, beta)."""
    direct = lehmer_mean(2, p)
    split = (2 * p.beta + 2 * p.alpha) / 2 - lehmer_mean(0, p)
    return direct, split


def _grid_maximum(objective: Callable[[np.ndarray], np.ndarray], grid_step: float) -> Tuple[float, float]:
    """Maximize over the window with a coarse grid, then a finer grid around the best point."""
    if not 0 < grid_step <= 0.01:
        raise ValueError(f"grid_step must lie in (0, 0.01], got {grid_step}")
    lo, hi = config.ORACLE_WINDOW
    count = int(round((hi - lo) / grid_step)) + 1
    s = np.linspace(lo, hi, count)
    values = objective(s)
    best = int(np.argmax(values))

    fine = np.linspace(s[best] - grid_step, s[best] + grid_step, 201)
    fine_values = objective(fine)
    k = int(np.argmax(fine_values))
    return float(fine_values[k]), float(fine[k])


def scalar_variational_oracle(p: ScalarPair, grid_step: float = config.ORACLE_GRID_STEP) -> float:
    """max over s + t = 1 of alpha - 2 alpha s^2 + beta - 2 beta t^2."""
    value, _ = scalar_variational_argmax(p, grid_step)
    return value


def scalar_variational_argmax(p: ScalarPair, grid_step: float = config.ORACLE_GRID_STEP) -> Tuple[float, float]:
    def objective(s):
        t = 1.0 - s
        return p.alpha - 2 * p.alpha * s ** 2 + p.beta - 2 * p.beta * t ** 2

    return _grid_maximum(objective, grid_step)


def scalar_weighted_variational_oracle(nu, p: ScalarPair, grid_step: float = config.ORACLE_GRID_STEP) -> float:
    """Grid maximum of (nu a - s^2 a) / (1 - nu) + ((1 - nu) b - (1 - s)^2 b) / nu."""
    value, _ = scalar_weighted_variational_argmax(nu, p, grid_step)
    return value


def scalar_weighted_variational_argmax(nu, p: ScalarPair, grid_step: float = config.ORACLE_GRID_STEP) -> Tuple[float, float]:
    w = as_weight(nu)
    v, u = w.value, w.complement

    def objective(s):
        y = 1.0 - s
        return (v * p.alpha - s ** 2 * p.alpha) / u + (u * p.beta - y ** 2 * p.beta) / v

    return _grid_maximum(objective, grid_step)
