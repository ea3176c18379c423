from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

import numpy as np
import pandas as pd

from igen.sgmc.error import EvaluationError

from .sampler_config import SamplerConfig


@dataclass(frozen=True, eq=False)
class Chain:
    """Draws recorded by one sampler run.

    ``draws`` holds unconstrained traces; ``constrained`` the model's parameters
    for the same rows, named by ``parameter_names``.
    """

    draws: np.ndarray
    constrained: np.ndarray
    parameter_names: tuple[str, ...]
    scheme: str
    config: SamplerConfig
    wall_time: float = 0.0
    accepted_count: int = 0
    divergent_count: int = 0
    gradient_evaluations: int = 0
    likelihood_terms: int = 0
    replica: int = 0
    metadata: dict[str, str] = field(default_factory=dict)

    def __post_init__(self):
        if self.draws.shape[0] != self.config.n_samples:
            raise EvaluationError(
                "chain length differs from n_samples",
                context={"draws": self.draws.shape[0], "n_samples": self.config.n_samples},
            )
        if not np.all(np.isfinite(self.draws)):
            raise EvaluationError("chain holds non-finite draws", context={"scheme": self.scheme})

    @property
    def size(self) -> int:
        return int(self.draws.shape[0])

    @property
    def acceptance_rate(self) -> float:
        return self.accepted_count / self.size

    def kept(self) -> np.ndarray:
        """Constrained draws after discarding the configured burn-in."""
        return self.constrained[self.config.burn_in :]

    def write_csv(self, path: Path | str) -> Path:
        """One row per draw, one column per constrained parameter."""
        target = Path(path)
        target.parent.mkdir(parents=True, exist_ok=True)
        frame = pd.DataFrame(self.constrained, columns=list(self.parameter_names))
        frame.to_csv(target, index=False, float_format="%.17g")
        return target
