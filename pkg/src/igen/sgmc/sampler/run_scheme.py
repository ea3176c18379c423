from __future__ import annotations

from typing import Optional

from igen.sgmc.distributions import Rng
from igen.sgmc.domain import Chain, SamplerConfig
from igen.sgmc.enum import Scheme, SchemeFamily
from igen.sgmc.error import UsageError
from igen.sgmc.model import MarginalizedModelProtocol, StochasticModelProtocol

from .composing import composing_mh_hmc
from .hmc import hmc
from .sghmc import sghmc


def initial_trace(trace_dim: int, rng: Rng):
    """``x0 ~ Normal(0, I)`` in the unconstrained space."""
    return rng.normal(size=trace_dim)


def run_scheme(
    scheme: Scheme,
    stochastic: Optional[StochasticModelProtocol],
    marginalized: Optional[MarginalizedModelProtocol],
    cfg: SamplerConfig,
    rng: Rng,
    replica: int = 0,
) -> Chain:
    """Draw ``x0`` and run ``scheme`` on the form of the program it needs."""
    model = marginalized if scheme.requires_marginalized else stochastic
    if model is None:
        raise UsageError(f"scheme {scheme} needs a model it was not given", context={"scheme": str(scheme)})

    x0 = initial_trace(model.trace_dim, rng)
    if scheme.family is SchemeFamily.SGHMC:
        config = cfg.with_overrides(grad_samples=scheme.grad_samples)
        return sghmc(model, x0, config, rng, scheme=str(scheme), replica=replica)
    if scheme.family is SchemeFamily.COMPOSING:
        return composing_mh_hmc(model, x0, cfg, rng, scheme=str(scheme), replica=replica)
    return hmc(model, x0, cfg, rng, scheme=str(scheme), replica=replica)
