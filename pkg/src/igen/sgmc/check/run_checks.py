from __future__ import annotations

from igen.sgmc.distributions import Rng
from igen.sgmc.domain import Observations
from igen.sgmc.enum import ModelKind
from igen.sgmc.zoo import ModelRegistry

from .check_result import CheckResult
from .suites import enumeration_check, gradient_check, unbiasedness_check


def run_checks(
    kind: ModelKind | str,
    data: Observations,
    seed: int = 0,
    biased: bool = False,
    gradient_trials: int = 100,
    trials: int = 20,
) -> list[CheckResult]:
    """Run the gradient, enumeration and unbiasedness suites on the leading observations of ``data``."""
    registry = ModelRegistry()
    small = registry.small_instance(kind, data)
    stochastic = registry.stochastic(kind, small)
    marginalized = registry.marginalized(kind, small)

    return [
        gradient_check(stochastic, marginalized, Rng(seed, 1), gradient_trials),
        enumeration_check(stochastic, marginalized, Rng(seed, 2), trials),
        unbiasedness_check(stochastic, marginalized, Rng(seed, 3), trials, biased),
    ]
