"""Unbiased stochastic gradients of the marginal log-density from the stochastic program."""

from __future__ import annotations

import numpy as np
from numpy.typing import ArrayLike

from igen.sgmc.distributions import Rng
from igen.sgmc.domain import GradientEstimate
from igen.sgmc.enum import NuisanceKernel
from igen.sgmc.error import UsageError
from igen.sgmc.model import (
    MarginalizedModelProtocol,
    StochasticModelProtocol,
    exact_posterior_nuisance,
    expected_gradient,
    log_joint_gradient,
    marginal_gradient,
    prior_nuisance_weights,
    resample_nuisance,
)


class GradientEstimator:
    """Averages ``n_samples`` gradients of the log joint, each at a freshly refreshed ``z``.

    The nuisance state is threaded through calls by the caller, so one estimator
    drives a single persistent ``z`` chain. With ``biased`` set, ``z`` is drawn from
    the nuisance prior instead of the conditional: the naive estimator, kept only as
    a negative control.
    """

    def __init__(
        self,
        model: StochasticModelProtocol,
        n_samples: int = 1,
        kernel: NuisanceKernel = NuisanceKernel.GIBBS,
        sweeps: int = 1,
        biased: bool = False,
    ):
        if n_samples < 1:
            raise UsageError("n_samples must be >= 1", context={"n_samples": n_samples})

        self.model = model
        self.n_samples = n_samples
        self.kernel = kernel
        self.sweeps = sweeps
        self.biased = biased
        self.evaluations = 0

    def _refresh(self, x: np.ndarray, z: np.ndarray, rng: Rng) -> np.ndarray:
        if self.biased:
            return self.model.prior_nuisance(rng)
        return resample_nuisance(self.model, x, z, rng, self.kernel, self.sweeps)

    def estimate(self, x: ArrayLike, z: ArrayLike, rng: Rng) -> GradientEstimate:
        trace = np.asarray(x, dtype=np.float64)
        state = np.asarray(z, dtype=np.int64)
        total = np.zeros(self.model.trace_dim)
        value = 0.0

        for _ in range(self.n_samples):
            state = self._refresh(trace, state, rng)
            value, gradient = log_joint_gradient(self.model, trace, state)
            total += gradient

        self.evaluations += self.n_samples
        return GradientEstimate(total / self.n_samples, value, state, self.n_samples)


class ExactGradientSource:
    """Exact marginal gradient behind the estimator interface; ``z`` passes through unchanged."""

    def __init__(self, model: MarginalizedModelProtocol):
        self.model = model
        self.evaluations = 0

    def estimate(self, x: ArrayLike, z: ArrayLike, rng: Rng) -> GradientEstimate:
        value, gradient = marginal_gradient(self.model, x)
        self.evaluations += 1
        return GradientEstimate(gradient, value, np.asarray(z, dtype=np.int64))


def estimate_gradient(
    model: StochasticModelProtocol,
    x: ArrayLike,
    z: ArrayLike,
    n_samples: int,
    rng: Rng,
    kernel: NuisanceKernel = NuisanceKernel.GIBBS,
    sweeps: int = 1,
) -> GradientEstimate:
    return GradientEstimator(model, n_samples, kernel, sweeps).estimate(x, z, rng)


def exact_expected_gradient(model: StochasticModelProtocol, x: ArrayLike) -> np.ndarray:
    """``sum_z p(z | x, y) grad log p~(x | y, z)`` by enumeration: the estimator's exact mean."""
    states, weights = exact_posterior_nuisance(model, x)
    return expected_gradient(model, x, states, weights)


def naive_expected_gradient(model: StochasticModelProtocol, x: ArrayLike) -> np.ndarray:
    """Mean of the biased estimator, which weights each ``z`` by its prior ``p(z | y)``."""
    states, weights = prior_nuisance_weights(model)
    return expected_gradient(model, x, states, weights)
