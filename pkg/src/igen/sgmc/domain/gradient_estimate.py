from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from igen.sgmc.error import EvaluationError


@dataclass(frozen=True, eq=False)
class GradientEstimate:
    """Averaged gradient of the log joint, with the nuisance state the chain continues from."""

    grad: np.ndarray
    log_joint: float
    nuisance: np.ndarray
    evaluations: int = 1

    def __post_init__(self):
        if not np.all(np.isfinite(self.grad)):
            raise EvaluationError("gradient estimate is not finite", context={"grad": self.grad.tolist()})
