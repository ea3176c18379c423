"""Effective sample size by Geyer's initial positive sequence."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from numpy.typing import ArrayLike

from igen.sgmc.error import UsageError
from igen.sgmc.service import get_logger

MIN_DRAWS = 100


@dataclass(frozen=True)
class EssEstimate:
    value: float
    degenerate: bool = False

    def __float__(self) -> float:
        return self.value


def autocorrelation(draws: ArrayLike) -> np.ndarray:
    """Biased sample autocorrelation at lags ``0..n-1``, computed with a zero-padded FFT."""
    values = np.asarray(draws, dtype=np.float64)
    n = values.size
    centered = values - values.mean()
    size = 1 << (2 * n - 1).bit_length()
    spectrum = np.fft.rfft(centered, size)
    autocovariance = np.fft.irfft(spectrum * np.conjugate(spectrum), size)[:n] / n
    return autocovariance / autocovariance[0]


def effective_sample_size(draws: ArrayLike) -> EssEstimate:
    """``n / (1 + 2 * sum_k rho_k)``, summing lag pairs while their sum stays positive.

    The result is clamped into ``(0, n]``. A constant sequence has no
    autocorrelation to estimate and yields ``n`` flagged as degenerate.
    """
    values = np.asarray(draws, dtype=np.float64)
    if values.ndim != 1:
        raise UsageError("effective_sample_size expects a single sequence", context={"shape": values.shape})
    n = values.size
    if n < MIN_DRAWS:
        raise UsageError(f"effective_sample_size needs at least {MIN_DRAWS} draws", context={"draws": n})

    if not np.all(np.isfinite(values)):
        raise UsageError("effective_sample_size needs finite draws")
    if np.ptp(values) == 0.0:
        get_logger().warning(f"effective sample size of a constant sequence of {n} draws is degenerate")
        return EssEstimate(float(n), degenerate=True)

    rho = autocorrelation(values)
    pairs = rho[: n - n % 2].reshape(-1, 2).sum(axis=1)
    negative = np.flatnonzero(pairs <= 0.0)
    kept = pairs if negative.size == 0 else pairs[: negative[0]]
    tau = -1.0 + 2.0 * kept.sum()

    return EssEstimate(float(min(n / tau, n)) if tau > 0 else float(n))


def multivariate_ess(draws: ArrayLike) -> EssEstimate:
    """Minimum per-coordinate ESS of a ``(n, d)`` draw matrix."""
    matrix = np.asarray(draws, dtype=np.float64)
    if matrix.ndim == 1:
        matrix = matrix[:, None]
    estimates = [effective_sample_size(matrix[:, column]) for column in range(matrix.shape[1])]
    return EssEstimate(
        min(estimate.value for estimate in estimates),
        degenerate=any(estimate.degenerate for estimate in estimates),
    )


def lag1_autocorrelation(values: ArrayLike) -> float:
    series = np.asarray(values, dtype=np.float64)
    centered = series - series.mean()
    denominator = float(centered @ centered)
    if denominator == 0.0:
        return 0.0
    return float(centered[:-1] @ centered[1:]) / denominator
