"""Closed-form log-densities; every function broadcasts over numpy arrays."""

from __future__ import annotations

import math

import numpy as np
from numpy.typing import ArrayLike
from scipy import special

from igen.sgmc.error import UsageError

LOG_SQRT_2PI = 0.5 * math.log(2.0 * math.pi)


def _scalar_or_array(value: np.ndarray) -> float | np.ndarray:
    return float(value) if np.ndim(value) == 0 else value


def check_scale(sigma: ArrayLike, name: str = "sigma") -> np.ndarray:
    values = np.asarray(sigma, dtype=np.float64)
    if not np.all(values > 0):
        raise UsageError(f"{name} must be positive", context={name: values.tolist()})
    return values


def check_probability(p: ArrayLike) -> np.ndarray:
    values = np.asarray(p, dtype=np.float64)
    if not np.all((values >= 0.0) & (values <= 1.0)):
        raise UsageError("probability must lie in [0, 1]", context={"p": values.tolist()})
    return values


def normal_logpdf(mu: ArrayLike, sigma: ArrayLike, v: ArrayLike) -> float | np.ndarray:
    """``log N(v | mu, sigma)`` parameterized by the standard deviation."""
    scale = check_scale(sigma)
    z = (np.asarray(v, dtype=np.float64) - np.asarray(mu, dtype=np.float64)) / scale
    return _scalar_or_array(-np.log(scale) - LOG_SQRT_2PI - 0.5 * z * z)


def bernoulli_logpmf(p: ArrayLike, v: ArrayLike) -> float | np.ndarray:
    """``log p`` for true outcomes and ``log(1 - p)`` for false ones; impossible outcomes give ``-inf``."""
    prob = check_probability(p)
    outcome = np.asarray(v, dtype=bool)
    with np.errstate(divide="ignore"):
        result = np.where(outcome, np.log(prob), np.log1p(-prob))
    return _scalar_or_array(result)


def beta_logpdf(a: ArrayLike, b: ArrayLike, v: ArrayLike) -> float | np.ndarray:
    alpha = check_scale(a, "a")
    beta = check_scale(b, "b")
    point = np.asarray(v, dtype=np.float64)
    if not np.all((point >= 0.0) & (point <= 1.0)):
        raise UsageError("beta support is [0, 1]", context={"v": point.tolist()})
    with np.errstate(divide="ignore", invalid="ignore"):
        result = special.xlogy(alpha - 1.0, point) + special.xlog1py(beta - 1.0, -point) - special.betaln(alpha, beta)
    return _scalar_or_array(result)
