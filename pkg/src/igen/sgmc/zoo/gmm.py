"""Gaussian mixture with unknown component means and scales, equal mixing weights."""

from __future__ import annotations

import math
from typing import Sequence

import numpy as np

from igen.sgmc import autodiff as ad
from igen.sgmc.autodiff import Variable
from igen.sgmc.distributions import Rng, categorical_sample_rows, check_probability, check_scale, normal_logpdf
from igen.sgmc.domain import GmmData
from igen.sgmc.enum import ModelKindEnum
from igen.sgmc.error import EvaluationError, UsageError
from igen.sgmc.model import CONDITIONAL, LIKELIHOOD, MarginalizedModel, StochasticModel

PRIOR_SCALE = 10.0


class _GmmParameters:
    """Trace layout ``(mu_0, log sigma_0, mu_1, log sigma_1, ...)``."""

    name = ModelKindEnum.GMM.value
    observations: GmmData

    @property
    def n_components(self) -> int:
        return self.observations.n_components

    @property
    def trace_dim(self) -> int:
        return 2 * self.n_components

    @property
    def parameter_names(self) -> tuple[str, ...]:
        return tuple(f"{kind}_{j}" for j in range(self.n_components) for kind in ("mu", "sigma"))

    def constrain(self, x: np.ndarray) -> np.ndarray:
        values = np.array(x, dtype=np.float64)
        values[1::2] = np.exp(values[1::2])
        return values

    def _components(self, x: Variable) -> tuple[Variable, Variable]:
        return x[0::2], ad.exp(x[1::2])

    def _scales(self, trace: np.ndarray) -> np.ndarray:
        with np.errstate(over="ignore"):
            sigma = np.exp(trace[1::2])
        if not np.all(np.isfinite(sigma) & (sigma > 0.0)):
            raise EvaluationError(
                "component scale left the positive reals", context={"log_sigma": trace[1::2].tolist()}
            )
        return sigma

    def _log_prior(self, x: Variable) -> Variable:
        return ad.normal_logpdf(0.0, PRIOR_SCALE, x).sum()


class GmmModel(_GmmParameters, StochasticModel):
    """Stochastic program: the component assignment of every observation is the nuisance state."""

    independent_sites = True

    @property
    def site_count(self) -> int:
        return self.observations.size

    @property
    def cardinality(self) -> int:
        return self.n_components

    def log_joint(self, x: Variable, z: np.ndarray) -> Variable:
        values = self.observations.values
        self.counter.add(LIKELIHOOD, values.size)

        mu, sigma = self._components(x)
        return self._log_prior(x) + ad.normal_logpdf(mu[z], sigma[z], values).sum()

    def all_site_log_weights(self, x: np.ndarray, z: np.ndarray) -> np.ndarray:
        values = self.observations.values
        trace = np.asarray(x, dtype=np.float64)
        self.counter.add(CONDITIONAL, values.size * self.n_components)

        mu, sigma = trace[0::2], self._scales(trace)
        return normal_logpdf(mu[None, :], sigma[None, :], values[:, None]) - math.log(self.n_components)

    def site_log_weights(self, site: int, x: np.ndarray, z: np.ndarray) -> np.ndarray:
        trace = np.asarray(x, dtype=np.float64)
        self.counter.add(CONDITIONAL, self.n_components)

        mu, sigma = trace[0::2], self._scales(trace)
        return normal_logpdf(mu, sigma, self.observations.values[site]) - math.log(self.n_components)


class MarginalizedGmmModel(_GmmParameters, MarginalizedModel):
    """Deterministic program: every observation sums its ``K`` equally weighted component densities."""

    def marginal_log_density(self, x: Variable) -> Variable:
        values = self.observations.values
        k = self.n_components
        self.counter.add(LIKELIHOOD, values.size * k)

        mu, sigma = self._components(x)
        densities = ad.normal_logpdf(mu.reshape((1, k)), sigma.reshape((1, k)), values[:, None])
        return self._log_prior(x) + ad.log_sum_exp(densities - math.log(k), axis=1).sum()


def generate_gmm(
    rng: Rng,
    n: int = 100,
    means: Sequence[float] = (-2.0, 2.0),
    sds: Sequence[float] = (1.0, 1.0),
    weights: Sequence[float] | None = None,
) -> GmmData:
    """Draw ``n`` observations, choosing each component with probability ``weights`` (fair by default)."""
    if n < 1:
        raise UsageError("gmm needs at least one observation", context={"n": n})
    mu = np.asarray(means, dtype=np.float64)
    sigma = check_scale(sds)
    if mu.shape != sigma.shape or mu.ndim != 1:
        raise UsageError("means and sds must be vectors of one length", context={"means": mu.size, "sds": sigma.size})

    k = mu.size
    probabilities = np.full(k, 1.0 / k) if weights is None else check_probability(weights)
    if probabilities.shape != (k,) or not math.isclose(probabilities.sum(), 1.0):
        raise UsageError("weights must be a probability vector over the components")

    with np.errstate(divide="ignore"):
        log_weights = np.tile(np.log(probabilities), (n, 1))
    components = categorical_sample_rows(log_weights, rng)
    return GmmData(rng.normal(mu[components], sigma[components]), k)
