"""Numerically stable log-space utilities shared by every density in the package."""

from __future__ import annotations

from typing import Sequence

import numpy as np
from numpy.typing import ArrayLike, NDArray
from scipy import special

from igen.sgmc.error import UsageError

LOG_HALF = float(np.log(0.5))


def _as_nonempty(terms: ArrayLike | Sequence[float], name: str) -> NDArray[np.float64]:
    values = np.asarray(terms, dtype=np.float64)
    if values.size == 0:
        raise UsageError(f"{name} requires at least one term")
    return values


def log_sum_exp(terms: ArrayLike | Sequence[float], axis: int | None = None) -> float | NDArray[np.float64]:
    """Return ``log(sum(exp(terms)))`` with the max-shift; all ``-inf`` terms give ``-inf``."""
    values = _as_nonempty(terms, "log_sum_exp")
    with np.errstate(divide="ignore", invalid="ignore"):
        result = special.logsumexp(values, axis=axis)
    return float(result) if np.ndim(result) == 0 else result


def sigmoid(u: ArrayLike) -> float | NDArray[np.float64]:
    """Logistic function ``1 / (1 + exp(-u))`` without overflow."""
    result = special.expit(np.asarray(u, dtype=np.float64))
    return float(result) if np.ndim(result) == 0 else result


def log_sigmoid(u: ArrayLike) -> float | NDArray[np.float64]:
    values = np.asarray(u, dtype=np.float64)
    result = -np.logaddexp(0.0, -values)
    return float(result) if np.ndim(result) == 0 else result


def log_softmax(u: ArrayLike, axis: int = -1) -> NDArray[np.float64]:
    """Log-probabilities ``u - log_sum_exp(u)`` along ``axis``."""
    values = _as_nonempty(u, "log_softmax")
    return special.log_softmax(values, axis=axis)
