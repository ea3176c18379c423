from __future__ import annotations

from typing import Protocol, runtime_checkable

import numpy as np

from igen.sgmc.distributions import Rng
from igen.sgmc.domain import GradientEstimate


@runtime_checkable
class GradientSource(Protocol):
    """Supplies ``grad_x log p~(x | y)`` (exactly or in expectation) to the samplers."""

    evaluations: int

    def estimate(self, x: np.ndarray, z: np.ndarray, rng: Rng) -> GradientEstimate:
        """Gradient at ``x``, continuing the nuisance chain from ``z``."""
        ...
