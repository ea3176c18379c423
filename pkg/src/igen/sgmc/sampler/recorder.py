from __future__ import annotations

from typing import TYPE_CHECKING

import numpy as np

from igen.sgmc.domain import Chain, SamplerConfig
from igen.sgmc.model import LIKELIHOOD
from igen.sgmc.service import get_logger

if TYPE_CHECKING:
    from .hmc import Transition


class ChainRecorder:
    """Accumulates draws and counters for one run and freezes them into a :class:`Chain`."""

    def __init__(self, model, scheme: str, cfg: SamplerConfig, replica: int):
        self.model = model
        self.scheme = scheme
        self.cfg = cfg
        self.replica = replica
        self.draws = np.empty((cfg.n_samples, model.trace_dim))
        self.size = 0
        self.accepted = 0
        self.divergent = 0
        self.gradient_evaluations = 0
        self._likelihood_start = model.counter[LIKELIHOOD]

    def record(self, x: np.ndarray, transition: "Transition | None" = None) -> None:
        self.draws[self.size] = x
        self.size += 1
        if transition is not None:
            self.accepted += transition.accepted
            self.divergent += transition.divergent

    def finish(self, wall_time: float) -> Chain:
        if self.divergent:
            get_logger().warning(
                f"{self.scheme} replica {self.replica}: {self.divergent} divergent transitions "
                f"of {self.cfg.n_samples} (step {self.cfg.step_size})"
            )
        get_logger().debug(f"{self.scheme} replica {self.replica} finished in {wall_time:.3f}s")

        return Chain(
            draws=self.draws,
            constrained=np.array([self.model.constrain(x) for x in self.draws]),
            parameter_names=self.model.parameter_names,
            scheme=self.scheme,
            config=self.cfg,
            wall_time=wall_time,
            accepted_count=self.accepted,
            divergent_count=self.divergent,
            gradient_evaluations=self.gradient_evaluations,
            likelihood_terms=self.model.counter[LIKELIHOOD] - self._likelihood_start,
            replica=self.replica,
            metadata={"model": self.model.name},
        )
