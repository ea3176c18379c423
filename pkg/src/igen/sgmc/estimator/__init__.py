from .gradient_estimator import (
    ExactGradientSource,
    GradientEstimator,
    estimate_gradient,
    exact_expected_gradient,
    naive_expected_gradient,
)
from .gradient_source import GradientSource

__all__ = [
    "ExactGradientSource",
    "GradientEstimator",
    "GradientSource",
    "estimate_gradient",
    "exact_expected_gradient",
    "naive_expected_gradient",
]
