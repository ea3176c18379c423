"""Hamiltonian Monte Carlo with an identity mass matrix and a leapfrog integrator."""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Callable

import numpy as np

from igen.sgmc.distributions import Rng
from igen.sgmc.domain import Chain, SamplerConfig
from igen.sgmc.error import EvaluationError
from igen.sgmc.model import MarginalizedModelProtocol, marginal_gradient
from igen.sgmc.service import get_logger

from .recorder import ChainRecorder

GradientFn = Callable[[np.ndarray], tuple[float, np.ndarray]]
"""Returns ``(log density, gradient)`` at a trace."""


@dataclass(frozen=True, eq=False)
class PhasePoint:
    x: np.ndarray
    log_density: float
    grad: np.ndarray


@dataclass(frozen=True)
class Transition:
    point: PhasePoint
    accepted: bool
    divergent: bool
    energy_change: float


def hamiltonian(log_density: float, momentum: np.ndarray) -> float:
    return -log_density + 0.5 * float(momentum @ momentum)


def leapfrog(
    gradient: GradientFn, start: PhasePoint, momentum: np.ndarray, step_size: float, steps: int
) -> tuple[PhasePoint, np.ndarray]:
    """Integrate ``steps`` leapfrog steps; returns the end point and its momentum."""
    x = start.x.copy()
    p = momentum + 0.5 * step_size * start.grad
    log_density, grad = start.log_density, start.grad

    for step in range(steps):
        x = x + step_size * p
        log_density, grad = gradient(x)
        p = p + (step_size if step < steps - 1 else 0.5 * step_size) * grad

    return PhasePoint(x, log_density, grad), p


def hmc_transition(gradient: GradientFn, current: PhasePoint, cfg: SamplerConfig, rng: Rng) -> Transition:
    """Fresh momentum, one trajectory, Metropolis correction on the energy change.

    Trajectories whose energy error exceeds ``cfg.divergence_threshold`` or that
    leave the finite reals are rejected and flagged divergent.
    """
    momentum = rng.normal(size=current.x.size)
    initial = hamiltonian(current.log_density, momentum)

    try:
        proposal, p = leapfrog(gradient, current, momentum, cfg.step_size, cfg.steps_per_sample)
        energy_change = hamiltonian(proposal.log_density, p) - initial
    except EvaluationError:
        return Transition(current, False, True, np.inf)

    if not np.isfinite(energy_change) or abs(energy_change) > cfg.divergence_threshold:
        return Transition(current, False, True, energy_change)

    if np.log(rng.random()) < -energy_change:
        return Transition(proposal, True, False, energy_change)
    return Transition(current, False, False, energy_change)


def start_point(gradient: GradientFn, x0: np.ndarray) -> PhasePoint:
    log_density, grad = gradient(x0)
    return PhasePoint(np.array(x0, dtype=np.float64), log_density, grad)


def hmc(
    model: MarginalizedModelProtocol,
    x0: np.ndarray,
    cfg: SamplerConfig,
    rng: Rng,
    scheme: str = "hmc-marg",
    replica: int = 0,
) -> Chain:
    """Standard HMC on the marginal log-density; records one position per transition."""
    logger = get_logger()
    recorder = ChainRecorder(model, scheme, cfg, replica)
    gradient: GradientFn = lambda x: marginal_gradient(model, x)  # noqa: E731

    started = time.perf_counter()
    current = start_point(gradient, x0)
    recorder.gradient_evaluations += 1
    logger.debug(f"hmc start: model={model.name} replica={replica} step={cfg.step_size}")

    for _ in range(cfg.n_samples):
        transition = hmc_transition(gradient, current, cfg, rng)
        current = transition.point
        recorder.record(current.x, transition)
        recorder.gradient_evaluations += cfg.steps_per_sample

    return recorder.finish(time.perf_counter() - started)
