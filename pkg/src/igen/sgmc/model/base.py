"""Shared behaviour of the stochastic and marginalized programs in the zoo."""

from __future__ import annotations

import math
from abc import ABC, abstractmethod
from typing import ClassVar

import numpy as np

from igen.sgmc.autodiff import Variable, evaluate
from igen.sgmc.distributions import Rng
from igen.sgmc.domain import Observations
from igen.sgmc.error import UsageError

from .evaluation_counter import EvaluationCounter


class StochasticModel(ABC):
    """Base for programs with a discrete nuisance state of uniform per-site support.

    Subclasses implement :meth:`log_joint` and usually override
    :meth:`site_log_weights` with a closed-form Markov-blanket conditional; the
    default evaluates the log joint once per candidate value.
    """

    name: ClassVar[str]
    independent_sites: ClassVar[bool] = False

    def __init__(self, observations: Observations):
        self.observations = observations
        self.counter = EvaluationCounter()

    @property
    @abstractmethod
    def trace_dim(self) -> int: ...

    @property
    @abstractmethod
    def parameter_names(self) -> tuple[str, ...]: ...

    @property
    @abstractmethod
    def site_count(self) -> int: ...

    @property
    @abstractmethod
    def cardinality(self) -> int:
        """Support size shared by every site."""

    @abstractmethod
    def log_joint(self, x: Variable, z: np.ndarray) -> Variable: ...

    @abstractmethod
    def constrain(self, x: np.ndarray) -> np.ndarray: ...

    def site_cardinality(self, site: int) -> int:
        return self.cardinality

    def site_log_weights(self, site: int, x: np.ndarray, z: np.ndarray) -> np.ndarray:
        weights = np.empty(self.cardinality)
        candidate = np.array(z, dtype=np.int64, copy=True)
        for value in range(self.cardinality):
            candidate[site] = value
            weights[value] = self.log_prior_nuisance(candidate) + evaluate(
                lambda trace: self.log_joint(trace, candidate), x
            )
        return weights

    def all_site_log_weights(self, x: np.ndarray, z: np.ndarray) -> np.ndarray:
        raise NotImplementedError(f"{self.name} sites are not conditionally independent")

    def prior_nuisance(self, rng: Rng) -> np.ndarray:
        return rng.integers(0, self.cardinality, self.site_count).astype(np.int64)

    def log_prior_nuisance(self, z: np.ndarray) -> float:
        return -self.site_count * math.log(self.cardinality)

    def validate_nuisance(self, z: np.ndarray) -> np.ndarray:
        state = np.asarray(z)
        if state.shape != (self.site_count,):
            raise UsageError(
                "nuisance state has the wrong length",
                context={"model": self.name, "expected": self.site_count, "actual": state.shape},
            )
        state = state.astype(np.int64)
        if state.size and (state.min() < 0 or state.max() >= self.cardinality):
            raise UsageError("nuisance value out of range", context={"model": self.name, "K": self.cardinality})
        return state


class MarginalizedModel(ABC):
    """Base for deterministic programs with the nuisance state summed out."""

    name: ClassVar[str]

    def __init__(self, observations: Observations):
        self.observations = observations
        self.counter = EvaluationCounter()

    @property
    @abstractmethod
    def trace_dim(self) -> int: ...

    @property
    @abstractmethod
    def parameter_names(self) -> tuple[str, ...]: ...

    @abstractmethod
    def marginal_log_density(self, x: Variable) -> Variable: ...

    @abstractmethod
    def constrain(self, x: np.ndarray) -> np.ndarray: ...
