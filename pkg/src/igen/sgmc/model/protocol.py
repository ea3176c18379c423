"""Contracts every probabilistic program implements, in stochastic and marginalized form."""

from __future__ import annotations

from typing import Protocol, runtime_checkable

import numpy as np

from igen.sgmc.autodiff import Variable
from igen.sgmc.distributions import Rng
from igen.sgmc.domain import Observations
from igen.sgmc.nuisance import SitewiseKernel

from .evaluation_counter import EvaluationCounter


@runtime_checkable
class StochasticModelProtocol(SitewiseKernel, Protocol):
    """A program returning ``log p~(x | y, z)`` for a nuisance state ``z`` it owns the kernels for."""

    name: str
    observations: Observations
    counter: EvaluationCounter

    @property
    def trace_dim(self) -> int:
        """Dimension of the unconstrained trace."""
        ...

    @property
    def parameter_names(self) -> tuple[str, ...]:
        """Names of the constrained parameters returned by :meth:`constrain`."""
        ...

    def log_joint(self, x: Variable, z: np.ndarray) -> Variable:
        """``log p~(x | y, z)``, differentiable in ``x`` with ``z`` held constant."""
        ...

    def prior_nuisance(self, rng: Rng) -> np.ndarray:
        """One draw from the nuisance prior ``p(z | y)``."""
        ...

    def log_prior_nuisance(self, z: np.ndarray) -> float:
        """``log p(z | y)``, used when enumerating the nuisance space."""
        ...

    def validate_nuisance(self, z: np.ndarray) -> np.ndarray:
        """Return ``z`` as an integer vector or raise if it does not fit the model."""
        ...

    def constrain(self, x: np.ndarray) -> np.ndarray:
        """Map an unconstrained trace to the model's natural parameters."""
        ...


@runtime_checkable
class MarginalizedModelProtocol(Protocol):
    """A deterministic program returning ``log p~(x | y)`` with the nuisance summed out."""

    name: str
    observations: Observations
    counter: EvaluationCounter

    @property
    def trace_dim(self) -> int: ...

    @property
    def parameter_names(self) -> tuple[str, ...]: ...

    def marginal_log_density(self, x: Variable) -> Variable:
        """``log p~(x | y)``, differentiable in ``x``."""
        ...

    def constrain(self, x: np.ndarray) -> np.ndarray: ...
