"""Randomized-response survey: each respondent flips a coin and answers truthfully only on heads."""

from __future__ import annotations

from enum import Enum

import numpy as np

from igen.sgmc import autodiff as ad
from igen.sgmc.autodiff import Variable
from igen.sgmc.distributions import Rng, bernoulli_logpmf, check_probability
from igen.sgmc.domain import SurveyData
from igen.sgmc.enum import ModelKindEnum
from igen.sgmc.error import UsageError
from igen.sgmc.model import CONDITIONAL, LIKELIHOOD, MarginalizedModel, StochasticModel
from igen.sgmc.numeric import LOG_HALF, sigmoid

HEADS = 1
TAILS = 0
PRIOR_SCALE = 10.0


class SurveyPrior(Enum):
    """Prior on the satisfaction rate ``theta``."""

    NORMAL = "normal"
    """Normal(0, 10) on the unconstrained ``logit(theta)``."""
    BETA = "beta"
    """Beta(1, 1) on ``theta`` itself, with the log-Jacobian of the sigmoid."""


def _log_prior(x: Variable, prior: SurveyPrior) -> Variable:
    logit = x[0]
    if prior is SurveyPrior.BETA:
        theta = ad.sigmoid(logit)
        return ad.beta_logpdf(1.0, 1.0, theta) + ad.log_sigmoid(logit) + ad.log_sigmoid(-logit)
    return ad.normal_logpdf(0.0, PRIOR_SCALE, logit)


class _SurveyParameters:
    name = ModelKindEnum.SURVEY.value
    observations: SurveyData

    @property
    def trace_dim(self) -> int:
        return 1

    @property
    def parameter_names(self) -> tuple[str, ...]:
        return ("theta",)

    def constrain(self, x: np.ndarray) -> np.ndarray:
        return np.array([sigmoid(np.asarray(x, dtype=np.float64)[0])])


class SurveyModel(_SurveyParameters, StochasticModel):
    """Stochastic program: the coin of every respondent is the nuisance state (1 = heads)."""

    independent_sites = True

    def __init__(self, observations: SurveyData, prior: SurveyPrior = SurveyPrior.NORMAL):
        super().__init__(observations)
        self.prior = prior

    @property
    def site_count(self) -> int:
        return self.observations.size

    @property
    def cardinality(self) -> int:
        return 2

    def log_joint(self, x: Variable, z: np.ndarray) -> Variable:
        answers = self.observations.answers
        heads = z == HEADS
        self.counter.add(LIKELIHOOD, answers.size)

        total = _log_prior(x, self.prior)
        if np.any(heads):
            theta = ad.sigmoid(x[0])
            total = total + ad.bernoulli_logpmf(theta, answers[heads]).sum()
        return total + LOG_HALF * int(np.count_nonzero(~heads))

    def all_site_log_weights(self, x: np.ndarray, z: np.ndarray) -> np.ndarray:
        answers = self.observations.answers
        theta = sigmoid(np.asarray(x, dtype=np.float64)[0])
        self.counter.add(CONDITIONAL, 2 * answers.size)

        weights = np.empty((answers.size, 2))
        weights[:, TAILS] = 2 * LOG_HALF
        weights[:, HEADS] = LOG_HALF + bernoulli_logpmf(theta, answers)
        return weights

    def site_log_weights(self, site: int, x: np.ndarray, z: np.ndarray) -> np.ndarray:
        theta = sigmoid(np.asarray(x, dtype=np.float64)[0])
        self.counter.add(CONDITIONAL, 2)
        return np.array([2 * LOG_HALF, LOG_HALF + bernoulli_logpmf(theta, self.observations.answers[site])])


class MarginalizedSurveyModel(_SurveyParameters, MarginalizedModel):
    """Deterministic program: each answer is a fair mixture of the truthful and the coin-flip response."""

    def __init__(self, observations: SurveyData, prior: SurveyPrior = SurveyPrior.NORMAL):
        super().__init__(observations)
        self.prior = prior

    def marginal_log_density(self, x: Variable) -> Variable:
        answers = self.observations.answers
        total = _log_prior(x, self.prior)
        if answers.size == 0:
            return total

        self.counter.add(LIKELIHOOD, 2 * answers.size)
        theta = ad.sigmoid(x[0])
        truthful = ad.bernoulli_logpmf(theta, answers) + LOG_HALF
        coin = np.full(answers.size, 2 * LOG_HALF)
        mixture = ad.log_sum_exp(ad.stack([truthful, coin], axis=1), axis=1)
        return total + mixture.sum()


def generate_survey(rng: Rng, theta: float = 0.67, n: int = 60) -> SurveyData:
    """Simulate ``n`` respondents: heads answers Bernoulli(``theta``), tails answers Bernoulli(0.5)."""
    if n < 1:
        raise UsageError("survey needs at least one respondent", context={"n": n})
    check_probability(theta)

    answers = np.empty(n, dtype=bool)
    for i in range(n):
        heads = rng.random() < 0.5
        answers[i] = rng.random() < (theta if heads else 0.5)
    return SurveyData(answers)
