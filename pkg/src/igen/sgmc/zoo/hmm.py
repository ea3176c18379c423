"""Hidden Markov model with an unknown transition matrix and fixed Gaussian emissions.

State ``j`` emits ``Normal(j, noise)``. The trace holds ``K * K`` unconstrained
entries; row ``i`` of the transition matrix is the softmax of entries
``i*K .. i*K + K - 1``. The initial state is uniform.
"""

from __future__ import annotations

import math

import numpy as np

from igen.sgmc import autodiff as ad
from igen.sgmc.autodiff import Variable
from igen.sgmc.distributions import Rng, categorical_sample, check_probability, normal_logpdf, normal_sample
from igen.sgmc.domain import HmmData
from igen.sgmc.enum import ModelKindEnum
from igen.sgmc.error import UsageError
from igen.sgmc.model import CONDITIONAL, LIKELIHOOD, MarginalizedModel, StochasticModel
from igen.sgmc.numeric import log_softmax

PRIOR_SCALE = 10.0


class _HmmParameters:
    name = ModelKindEnum.HMM.value
    observations: HmmData

    @property
    def n_states(self) -> int:
        return self.observations.n_states

    @property
    def trace_dim(self) -> int:
        return self.n_states * self.n_states

    @property
    def parameter_names(self) -> tuple[str, ...]:
        return tuple(f"T_{i}_{j}" for i in range(self.n_states) for j in range(self.n_states))

    def constrain(self, x: np.ndarray) -> np.ndarray:
        """Row-major transition probabilities."""
        return np.exp(self.log_transitions(x)).ravel()

    def log_transitions(self, x: np.ndarray) -> np.ndarray:
        k = self.n_states
        return log_softmax(np.asarray(x, dtype=np.float64).reshape(k, k), axis=1)

    def emission_log_densities(self) -> np.ndarray:
        """``(T, K)`` matrix of ``log Normal(y_t | j, noise)``; constant in the trace."""
        states = np.arange(self.n_states, dtype=np.float64)
        return normal_logpdf(states[None, :], self.observations.noise, self.observations.values[:, None])

    def _log_transitions(self, x: Variable) -> Variable:
        k = self.n_states
        return ad.log_softmax(x.reshape((k, k)), axis=1)

    def _log_prior(self, x: Variable) -> Variable:
        return ad.normal_logpdf(0.0, PRIOR_SCALE, x).sum()


class HmmModel(_HmmParameters, StochasticModel):
    """Stochastic program over one hidden state per time step.

    The transition terms live in :meth:`log_joint`; the nuisance prior carries
    only the uniform initial state, so :meth:`log_prior_nuisance` is ``-log K``.
    """

    @property
    def site_count(self) -> int:
        return self.observations.size

    @property
    def cardinality(self) -> int:
        return self.n_states

    def log_prior_nuisance(self, z: np.ndarray) -> float:
        return -math.log(self.n_states)

    def log_joint(self, x: Variable, z: np.ndarray) -> Variable:
        values = self.observations.values
        steps = values.size
        self.counter.add(LIKELIHOOD, steps + steps - 1)

        emissions = float(np.sum(normal_logpdf(z.astype(np.float64), self.observations.noise, values)))
        total = self._log_prior(x) + emissions
        if steps > 1:
            total = total + self._log_transitions(x)[z[:-1], z[1:]].sum()
        return total

    def site_log_weights(self, site: int, x: np.ndarray, z: np.ndarray) -> np.ndarray:
        k = self.n_states
        log_t = self.log_transitions(x)
        self.counter.add(CONDITIONAL, k)

        states = np.arange(k, dtype=np.float64)
        weights = normal_logpdf(states, self.observations.noise, self.observations.values[site])
        weights = weights + (log_t[z[site - 1], :] if site > 0 else -math.log(k))
        if site < self.site_count - 1:
            weights = weights + log_t[:, z[site + 1]]
        return weights


class MarginalizedHmmModel(_HmmParameters, MarginalizedModel):
    """Deterministic program: the forward algorithm sums over every state path."""

    def marginal_log_density(self, x: Variable) -> Variable:
        k = self.n_states
        emissions = self.emission_log_densities()
        steps = emissions.shape[0]
        self.counter.add(LIKELIHOOD, steps * k + (steps - 1) * k * k)

        log_t = self._log_transitions(x)
        alpha = ad.as_variable(emissions[0] - math.log(k))
        for t in range(1, steps):
            alpha = ad.log_sum_exp(alpha.reshape((k, 1)) + log_t, axis=0) + emissions[t]
        return self._log_prior(x) + ad.log_sum_exp(alpha)


def true_transition_matrix(k: int = 3, self_transition: float = 0.8) -> np.ndarray:
    """Self-transition ``self_transition``; the remainder split evenly over the other states."""
    if k < 1:
        raise UsageError("hmm needs at least one state", context={"k": k})
    check_probability(self_transition)
    if k == 1:
        return np.ones((1, 1))

    matrix = np.full((k, k), (1.0 - self_transition) / (k - 1))
    np.fill_diagonal(matrix, self_transition)
    return matrix


def generate_hmm(
    rng: Rng, t: int = 16, k: int = 3, noise: float = 0.5, self_transition: float = 0.8
) -> HmmData:
    """Simulate ``t`` emissions of the chain defined by :func:`true_transition_matrix`."""
    if t < 1:
        raise UsageError("hmm needs at least one time step", context={"t": t})
    with np.errstate(divide="ignore"):
        log_t = np.log(true_transition_matrix(k, self_transition))

    states = np.empty(t, dtype=np.int64)
    states[0] = rng.integers(0, k)
    for step in range(1, t):
        states[step] = categorical_sample(log_t[states[step - 1]], rng)
    return HmmData(normal_sample(states.astype(np.float64), noise, rng), k, noise)
