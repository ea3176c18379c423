"""Exhaustive enumeration of the nuisance space for small instances."""

from __future__ import annotations

import itertools
import math
from typing import Callable

import numpy as np
from numpy.typing import ArrayLike

from igen.sgmc.autodiff import finite_difference_gradient
from igen.sgmc.error import UsageError
from igen.sgmc.numeric import log_sum_exp

from .operations import log_joint, log_joint_gradient
from .protocol import StochasticModelProtocol

MAX_STATES = 1 << 16


def enumerate_nuisance(model: StochasticModelProtocol, limit: int = MAX_STATES) -> list[np.ndarray]:
    """Every nuisance state of ``model``; refuses spaces larger than ``limit``."""
    supports = [model.site_cardinality(site) for site in range(model.site_count)]
    count = math.prod(supports)
    if count > limit:
        raise UsageError("nuisance space too large to enumerate", context={"states": count, "limit": limit})
    return [np.array(state, dtype=np.int64) for state in itertools.product(*(range(k) for k in supports))]


def _joint_terms(model: StochasticModelProtocol, x: ArrayLike, states: list[np.ndarray]) -> np.ndarray:
    return np.array([model.log_prior_nuisance(z) + log_joint(model, x, z) for z in states])


def enumerated_log_density(model: StochasticModelProtocol, x: ArrayLike) -> float:
    """``log sum_z p(z | y) p~(x | y, z)``; the oracle for the marginalized programs."""
    states = enumerate_nuisance(model)
    return float(log_sum_exp(_joint_terms(model, x, states)))


def exact_posterior_nuisance(model: StochasticModelProtocol, x: ArrayLike) -> tuple[list[np.ndarray], np.ndarray]:
    """Enumerated ``p(z | x, y)`` as parallel lists of states and probabilities."""
    states = enumerate_nuisance(model)
    terms = _joint_terms(model, x, states)
    return states, np.exp(terms - log_sum_exp(terms))


def prior_nuisance_weights(model: StochasticModelProtocol) -> tuple[list[np.ndarray], np.ndarray]:
    states = enumerate_nuisance(model)
    log_prior = np.array([model.log_prior_nuisance(z) for z in states])
    return states, np.exp(log_prior - log_sum_exp(log_prior))


def expected_gradient(
    model: StochasticModelProtocol, x: ArrayLike, states: list[np.ndarray], weights: np.ndarray
) -> np.ndarray:
    gradients = np.array([log_joint_gradient(model, x, z)[1] for z in states])
    return weights @ gradients


def log_joint_finite_difference(
    model: StochasticModelProtocol, x: ArrayLike, z: ArrayLike, h: float = 1e-3
) -> np.ndarray:
    state = model.validate_nuisance(np.asarray(z))
    density: Callable = lambda trace: model.log_joint(trace, state)  # noqa: E731
    return finite_difference_gradient(density, x, h)
