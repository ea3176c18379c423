"""Exact consistency checks between the stochastic and marginalized form of a program."""

from __future__ import annotations

import numpy as np

from igen.sgmc.autodiff import finite_difference_gradient
from igen.sgmc.distributions import Rng
from igen.sgmc.estimator import exact_expected_gradient, naive_expected_gradient
from igen.sgmc.model import (
    MarginalizedModelProtocol,
    StochasticModelProtocol,
    enumerated_log_density,
    log_joint_finite_difference,
    log_joint_gradient,
    marginal_gradient,
    marginal_log_density,
)
from igen.sgmc.service import get_logger

from .check_result import CheckResult

GRADIENT_TOLERANCE = 1e-6
GRADIENT_ABSOLUTE_FLOOR = 1e-8
ENUMERATION_TOLERANCE = 1e-10
UNBIASEDNESS_TOLERANCE = 1e-9
FINITE_DIFFERENCE_STEP = 1e-3


def gradient_error(gradient: np.ndarray, reference: np.ndarray) -> float:
    """Largest per-coordinate relative error; coordinates of ``reference`` near zero are held to the absolute floor."""
    scale = np.maximum(np.abs(reference), GRADIENT_ABSOLUTE_FLOOR / GRADIENT_TOLERANCE)
    return float(np.max(np.abs(np.asarray(gradient) - reference) / scale))


def _scaled_error(exact: np.ndarray, approximate: np.ndarray) -> float:
    return float(np.max(np.abs(exact - approximate) / np.maximum(1.0, np.abs(approximate))))


def gradient_check(
    model: StochasticModelProtocol, marginalized: MarginalizedModelProtocol, rng: Rng, trials: int = 100
) -> CheckResult:
    """Tape gradients against central differences at random ``(x, z)``, for both forms."""
    worst = 0.0
    for _ in range(trials):
        x = rng.normal(size=model.trace_dim)
        z = model.prior_nuisance(rng)
        _, gradient = log_joint_gradient(model, x, z)
        worst = max(worst, gradient_error(gradient, log_joint_finite_difference(model, x, z, FINITE_DIFFERENCE_STEP)))

        _, gradient = marginal_gradient(marginalized, x)
        reference = finite_difference_gradient(
            marginalized.marginal_log_density, x, FINITE_DIFFERENCE_STEP
        )
        worst = max(worst, gradient_error(gradient, reference))
    return CheckResult("gradient", model.name, worst < GRADIENT_TOLERANCE, worst, GRADIENT_TOLERANCE, trials)


def enumeration_check(
    model: StochasticModelProtocol, marginalized: MarginalizedModelProtocol, rng: Rng, trials: int = 20
) -> CheckResult:
    """Summing the stochastic program over every ``z`` reproduces the marginalized program."""
    worst = 0.0
    for _ in range(trials):
        x = rng.normal(size=model.trace_dim)
        worst = max(worst, abs(enumerated_log_density(model, x) - marginal_log_density(marginalized, x)))
    return CheckResult(
        "enumeration", model.name, worst <= ENUMERATION_TOLERANCE, worst, ENUMERATION_TOLERANCE, trials
    )


def unbiasedness_check(
    model: StochasticModelProtocol,
    marginalized: MarginalizedModelProtocol,
    rng: Rng,
    trials: int = 20,
    biased: bool = False,
) -> CheckResult:
    """The estimator's exact mean under the enumerated conditional equals the marginal gradient.

    With ``biased`` the naive prior-weighted estimator is checked instead; it is
    expected to fail.
    """
    expectation = naive_expected_gradient if biased else exact_expected_gradient
    worst = 0.0
    worst_absolute = 0.0
    for _ in range(trials):
        x = rng.normal(size=model.trace_dim)
        _, exact = marginal_gradient(marginalized, x)
        estimate = expectation(model, x)
        worst = max(worst, _scaled_error(estimate, exact))
        worst_absolute = max(worst_absolute, float(np.max(np.abs(estimate - exact))))

    name = "naive-estimator" if biased else "unbiasedness"
    result = CheckResult(
        name, model.name, worst <= UNBIASEDNESS_TOLERANCE, worst, UNBIASEDNESS_TOLERANCE, trials, worst_absolute
    )
    if biased and not result.passed:
        get_logger().info(f"naive estimator is biased on {model.name}: max error {worst:.3e}")
    return result
