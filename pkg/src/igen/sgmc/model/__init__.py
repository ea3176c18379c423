from .base import MarginalizedModel, StochasticModel
from .enumeration import (
    MAX_STATES,
    enumerate_nuisance,
    enumerated_log_density,
    exact_posterior_nuisance,
    expected_gradient,
    log_joint_finite_difference,
    prior_nuisance_weights,
)
from .evaluation_counter import CONDITIONAL, LIKELIHOOD, EvaluationCounter
from .operations import (
    log_joint,
    log_joint_gradient,
    marginal_gradient,
    marginal_log_density,
    resample_nuisance,
)
from .protocol import MarginalizedModelProtocol, StochasticModelProtocol

__all__ = [
    "CONDITIONAL",
    "LIKELIHOOD",
    "MAX_STATES",
    "EvaluationCounter",
    "MarginalizedModel",
    "MarginalizedModelProtocol",
    "StochasticModel",
    "StochasticModelProtocol",
    "enumerate_nuisance",
    "enumerated_log_density",
    "exact_posterior_nuisance",
    "expected_gradient",
    "log_joint",
    "log_joint_finite_difference",
    "log_joint_gradient",
    "marginal_gradient",
    "marginal_log_density",
    "prior_nuisance_weights",
    "resample_nuisance",
]
