"""Model-level operations with dimension checks and error context."""

from __future__ import annotations

import numpy as np
from numpy.typing import ArrayLike

from igen.sgmc.autodiff import Variable, evaluate, grad
from igen.sgmc.distributions import Rng
from igen.sgmc.enum import NuisanceKernel
from igen.sgmc.error import EvaluationError, UsageError
from igen.sgmc.nuisance import sweep

from .protocol import MarginalizedModelProtocol, StochasticModelProtocol


def _check_dim(model: StochasticModelProtocol | MarginalizedModelProtocol, x: Variable | ArrayLike) -> None:
    size = x.size if isinstance(x, Variable) else np.size(x)
    if size != model.trace_dim:
        raise UsageError(
            "trace dimension mismatch", context={"model": model.name, "expected": model.trace_dim, "actual": size}
        )


def _with_model(error: EvaluationError, model, term: str) -> EvaluationError:
    error.context.setdefault("model", model.name)
    error.context.setdefault("term", term)
    return error


def log_joint(model: StochasticModelProtocol, x: Variable | ArrayLike, z: ArrayLike) -> Variable | float:
    """``log p~(x | y, z)``; a :class:`Variable` input stays on its tape, an array input gives a float."""
    _check_dim(model, x)
    state = model.validate_nuisance(np.asarray(z))
    try:
        if isinstance(x, Variable):
            return model.log_joint(x, state)
        return evaluate(lambda trace: model.log_joint(trace, state), x, model.trace_dim)
    except EvaluationError as error:
        raise _with_model(error, model, "log_joint")


def log_joint_gradient(model: StochasticModelProtocol, x: ArrayLike, z: ArrayLike) -> tuple[float, np.ndarray]:
    state = model.validate_nuisance(np.asarray(z))
    try:
        return grad(lambda trace: model.log_joint(trace, state), x, model.trace_dim)
    except EvaluationError as error:
        raise _with_model(error, model, "log_joint")


def marginal_log_density(model: MarginalizedModelProtocol, x: Variable | ArrayLike) -> Variable | float:
    """``log p~(x | y)`` with the nuisance state summed out exactly."""
    _check_dim(model, x)
    try:
        if isinstance(x, Variable):
            return model.marginal_log_density(x)
        return evaluate(model.marginal_log_density, x, model.trace_dim)
    except EvaluationError as error:
        raise _with_model(error, model, "marginal_log_density")


def marginal_gradient(model: MarginalizedModelProtocol, x: ArrayLike) -> tuple[float, np.ndarray]:
    try:
        return grad(model.marginal_log_density, x, model.trace_dim)
    except EvaluationError as error:
        raise _with_model(error, model, "marginal_log_density")


def resample_nuisance(
    model: StochasticModelProtocol,
    x: ArrayLike,
    z: ArrayLike,
    rng: Rng,
    kernel: NuisanceKernel = NuisanceKernel.GIBBS,
    sweeps: int = 1,
) -> np.ndarray:
    """Refresh ``z`` with full sweeps of a kernel that leaves ``p(z | x, y)`` invariant."""
    _check_dim(model, x)
    state = model.validate_nuisance(np.asarray(z))
    try:
        return sweep(model, np.asarray(x, dtype=np.float64), state, rng, kernel, sweeps)
    except EvaluationError as error:
        raise _with_model(error, model, "resample_nuisance")
