"""Alternating baseline: a Metropolis sweep on ``z``, then HMC on ``x`` at that fixed ``z``."""

from __future__ import annotations

import time

import numpy as np

from igen.sgmc.distributions import Rng
from igen.sgmc.domain import Chain, SamplerConfig
from igen.sgmc.model import StochasticModelProtocol, log_joint_gradient, resample_nuisance
from igen.sgmc.service import get_logger

from .hmc import GradientFn, hmc_transition, start_point
from .recorder import ChainRecorder


def composing_mh_hmc(
    model: StochasticModelProtocol,
    x0: np.ndarray,
    cfg: SamplerConfig,
    rng: Rng,
    scheme: str = "mh-hmc",
    replica: int = 0,
) -> Chain:
    recorder = ChainRecorder(model, scheme, cfg, replica)
    x = np.array(x0, dtype=np.float64)
    z = model.prior_nuisance(rng)
    log_joint_gradient(model, x, z)
    get_logger().debug(f"mh-hmc start: model={model.name} replica={replica} kernel={cfg.baseline_kernel.value}")

    started = time.perf_counter()
    for _ in range(cfg.n_samples):
        z = resample_nuisance(model, x, z, rng, cfg.baseline_kernel, cfg.sweeps)
        state = z
        gradient: GradientFn = lambda trace: log_joint_gradient(model, trace, state)  # noqa: E731

        transition = hmc_transition(gradient, start_point(gradient, x), cfg, rng)
        x = transition.point.x
        recorder.record(x, transition)
        recorder.gradient_evaluations += 1 + cfg.steps_per_sample

    return recorder.finish(time.perf_counter() - started)
