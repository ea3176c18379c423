"""Draws from the distributions used by the models and samplers."""

from __future__ import annotations

import numpy as np
from numpy.typing import ArrayLike

from igen.sgmc.error import EvaluationError, UsageError

from .densities import check_probability, check_scale
from .rng import Rng

Size = int | tuple[int, ...] | None


def _normalized_cumulative(log_weights: np.ndarray) -> np.ndarray:
    peak = np.max(log_weights, axis=-1, keepdims=True)
    if np.any(np.isneginf(peak)):
        raise EvaluationError("categorical weights are all -inf", context={"log_weights": log_weights.tolist()})
    if np.any(np.isnan(log_weights)) or np.any(np.isposinf(peak)):
        raise EvaluationError("categorical weights are not finite", context={"log_weights": log_weights.tolist()})
    return np.cumsum(np.exp(log_weights - peak), axis=-1)


def categorical_sample(log_weights: ArrayLike, rng: Rng) -> int:
    """Draw index ``i`` with probability proportional to ``exp(log_weights[i])``."""
    weights = np.asarray(log_weights, dtype=np.float64)
    if weights.ndim != 1 or weights.size == 0:
        raise UsageError("categorical_sample expects a non-empty vector of log-weights")

    cumulative = _normalized_cumulative(weights)
    target = rng.random() * cumulative[-1]
    return min(int(np.searchsorted(cumulative, target, side="right")), weights.size - 1)


def categorical_sample_rows(log_weights: ArrayLike, rng: Rng) -> np.ndarray:
    """Row-wise :func:`categorical_sample`, consuming one uniform per row in row order."""
    weights = np.asarray(log_weights, dtype=np.float64)
    if weights.ndim != 2 or weights.shape[1] == 0:
        raise UsageError("categorical_sample_rows expects a (rows, support) matrix")

    cumulative = _normalized_cumulative(weights)
    targets = rng.random(weights.shape[0]) * cumulative[:, -1]
    indices = np.sum(cumulative <= targets[:, None], axis=1)
    return np.minimum(indices, weights.shape[1] - 1).astype(np.int64)


def normal_sample(mu: ArrayLike, sigma: ArrayLike, rng: Rng, size: Size = None) -> float | np.ndarray:
    scale = check_scale(sigma)
    draw = rng.normal(np.asarray(mu, dtype=np.float64), scale, size)
    return float(draw) if np.ndim(draw) == 0 else draw


def bernoulli_sample(p: ArrayLike, rng: Rng, size: Size = None) -> bool | np.ndarray:
    prob = check_probability(p)
    draw = rng.random(size if size is not None else prob.shape or None) < prob
    return bool(draw) if np.ndim(draw) == 0 else draw


def uniform_sample(low: float, high: float, rng: Rng, size: Size = None) -> float | np.ndarray:
    if not low < high:
        raise UsageError("uniform_sample requires low < high", context={"low": low, "high": high})
    draw = rng.uniform(low, high, size)
    return float(draw) if np.ndim(draw) == 0 else draw
