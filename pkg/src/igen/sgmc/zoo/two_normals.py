"""Bimodal illustration: a fair coin selects ``Normal(1, 0.5)`` or ``Normal(-1, 0.5)`` for ``x``."""

from __future__ import annotations

import numpy as np

from igen.sgmc import autodiff as ad
from igen.sgmc.autodiff import Variable
from igen.sgmc.distributions import normal_logpdf
from igen.sgmc.domain import TwoNormalsData
from igen.sgmc.enum import ModelKindEnum
from igen.sgmc.model import CONDITIONAL, LIKELIHOOD, MarginalizedModel, StochasticModel
from igen.sgmc.numeric import LOG_HALF

COMPONENT_MEANS = np.array([-1.0, 1.0])
"""Indexed by the coin: 0 (tails) selects -1, 1 (heads) selects +1."""
COMPONENT_SD = 0.5


class _TwoNormalsParameters:
    name = ModelKindEnum.TWONORMALS.value
    observations: TwoNormalsData

    @property
    def trace_dim(self) -> int:
        return 1

    @property
    def parameter_names(self) -> tuple[str, ...]:
        return ("x",)

    def constrain(self, x: np.ndarray) -> np.ndarray:
        return np.array(x, dtype=np.float64)


class TwoNormalsModel(_TwoNormalsParameters, StochasticModel):
    independent_sites = True

    def __init__(self, observations: TwoNormalsData | None = None):
        super().__init__(observations or TwoNormalsData())

    @property
    def site_count(self) -> int:
        return 1

    @property
    def cardinality(self) -> int:
        return 2

    def log_joint(self, x: Variable, z: np.ndarray) -> Variable:
        self.counter.add(LIKELIHOOD)
        return ad.normal_logpdf(COMPONENT_MEANS[z[0]], COMPONENT_SD, x[0])

    def all_site_log_weights(self, x: np.ndarray, z: np.ndarray) -> np.ndarray:
        self.counter.add(CONDITIONAL, 2)
        return (LOG_HALF + normal_logpdf(COMPONENT_MEANS, COMPONENT_SD, np.asarray(x, dtype=np.float64)[0]))[None, :]

    def site_log_weights(self, site: int, x: np.ndarray, z: np.ndarray) -> np.ndarray:
        return self.all_site_log_weights(x, z)[0]


class MarginalizedTwoNormalsModel(_TwoNormalsParameters, MarginalizedModel):
    """Equal-weight mixture of the two components; used as the exact-gradient reference."""

    def __init__(self, observations: TwoNormalsData | None = None):
        super().__init__(observations or TwoNormalsData())

    def marginal_log_density(self, x: Variable) -> Variable:
        self.counter.add(LIKELIHOOD, 2)
        return ad.log_sum_exp(ad.normal_logpdf(COMPONENT_MEANS, COMPONENT_SD, x[0]) + LOG_HALF)
