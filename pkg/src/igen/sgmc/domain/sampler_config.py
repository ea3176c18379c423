from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Any

from igen.sgmc.enum import NuisanceKernel
from igen.sgmc.error import UsageError


@dataclass(frozen=True)
class SamplerConfig:
    """Settings shared by every inference scheme.

    ``step_size`` is the leapfrog step of the HMC schemes. sgHMC uses its square as
    the learning rate, so one value tuned on the marginalized model serves all schemes.
    """

    n_samples: int = 10_000
    steps_per_sample: int = 10
    step_size: float = 0.1
    friction: float = 0.1
    grad_samples: int = 1
    seed: int = 0
    kernel: NuisanceKernel = NuisanceKernel.GIBBS
    baseline_kernel: NuisanceKernel = NuisanceKernel.MH
    sweeps: int = 1
    burn_in_fraction: float = 0.1
    divergence_threshold: float = 1000.0

    def __post_init__(self):
        if self.n_samples < 1:
            raise UsageError("n_samples must be >= 1", context={"n_samples": self.n_samples})
        if self.steps_per_sample < 1:
            raise UsageError("steps_per_sample must be >= 1", context={"steps_per_sample": self.steps_per_sample})
        if not self.step_size > 0:
            raise UsageError("step_size must be > 0", context={"step_size": self.step_size})
        if not 0 <= self.friction <= 1:
            raise UsageError("friction must lie in [0, 1]", context={"friction": self.friction})
        if self.grad_samples < 1:
            raise UsageError("grad_samples must be >= 1", context={"grad_samples": self.grad_samples})
        if self.sweeps < 1:
            raise UsageError("sweeps must be >= 1", context={"sweeps": self.sweeps})
        if self.seed < 0:
            raise UsageError("seed must be non-negative", context={"seed": self.seed})
        if not 0 <= self.burn_in_fraction < 1:
            raise UsageError("burn_in_fraction must lie in [0, 1)", context={"burn_in": self.burn_in_fraction})

    @property
    def learning_rate(self) -> float:
        return self.step_size * self.step_size

    @property
    def burn_in(self) -> int:
        return int(self.n_samples * self.burn_in_fraction)

    def with_overrides(self, **overrides: Any) -> "SamplerConfig":
        """Return a copy with every non-``None`` override applied."""
        return replace(self, **{key: value for key, value in overrides.items() if value is not None})
