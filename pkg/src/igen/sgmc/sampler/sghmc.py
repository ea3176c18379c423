"""Stochastic-gradient HMC: friction-damped dynamics driven by noisy gradients, no accept/reject."""

from __future__ import annotations

import math
import time
from typing import Optional

import numpy as np

from igen.sgmc.distributions import Rng
from igen.sgmc.domain import Chain, SamplerConfig
from igen.sgmc.error import EvaluationError
from igen.sgmc.estimator import GradientEstimator, GradientSource
from igen.sgmc.model import MarginalizedModelProtocol, StochasticModelProtocol, log_joint
from igen.sgmc.service import get_logger

from .recorder import ChainRecorder


def sghmc(
    model: StochasticModelProtocol | MarginalizedModelProtocol,
    x0: np.ndarray,
    cfg: SamplerConfig,
    rng: Rng,
    source: Optional[GradientSource] = None,
    scheme: str = "sghmc",
    replica: int = 0,
) -> Chain:
    """Run ``cfg.steps_per_sample`` updates per recorded draw.

    In velocity form with learning rate ``eta = step_size**2`` and friction ``alpha``::

        v <- v + eta * grad - alpha * v + Normal(0, 2 * alpha * eta)
        x <- x + v

    The velocity is redrawn as ``step_size * Normal(0, I)`` before every block. By
    default the gradient comes from a :class:`GradientEstimator` over the model's
    nuisance state; pass ``source`` to drive the dynamics with another estimator.
    """
    logger = get_logger()
    if source is None:
        source = GradientEstimator(model, cfg.grad_samples, cfg.kernel, cfg.sweeps)

    x = np.array(x0, dtype=np.float64)
    if hasattr(model, "prior_nuisance"):
        z = model.prior_nuisance(rng)
        log_joint(model, x, z)
    else:
        z = np.empty(0, dtype=np.int64)

    recorder = ChainRecorder(model, scheme, cfg, replica)
    eta = cfg.learning_rate
    alpha = cfg.friction
    noise = math.sqrt(2.0 * alpha * eta)
    evaluations_start = source.evaluations
    logger.debug(f"sghmc start: model={model.name} replica={replica} eta={eta} friction={alpha}")

    started = time.perf_counter()
    for sample in range(cfg.n_samples):
        v = cfg.step_size * rng.normal(size=x.size)
        for step in range(cfg.steps_per_sample):
            index = sample * cfg.steps_per_sample + step
            try:
                estimate = source.estimate(x, z, rng)
            except EvaluationError as error:
                error.context.update(step=index, sample=sample)
                logger.warning(f"sghmc aborted at step {index}: model={model.name} replica={replica}: {error.message}")
                raise
            z = estimate.nuisance
            v = v + eta * estimate.grad - alpha * v + rng.normal(0.0, noise, x.size)
            x = x + v
            if not (np.all(np.isfinite(x)) and np.all(np.isfinite(v))):
                logger.warning(f"sghmc aborted at step {index}: model={model.name} replica={replica}")
                raise EvaluationError(
                    "sghmc chain left the finite reals",
                    context={"step": index, "sample": sample, "x": x.tolist(), "v": v.tolist()},
                )
        recorder.record(x)

    recorder.gradient_evaluations = source.evaluations - evaluations_start
    return recorder.finish(time.perf_counter() - started)
