from .densities import LOG_SQRT_2PI, bernoulli_logpmf, beta_logpdf, check_probability, check_scale, normal_logpdf
from .rng import Rng, empirical_frequencies
from .sampling import (
    bernoulli_sample,
    categorical_sample,
    categorical_sample_rows,
    normal_sample,
    uniform_sample,
)

__all__ = [
    "LOG_SQRT_2PI",
    "Rng",
    "bernoulli_logpmf",
    "bernoulli_sample",
    "beta_logpdf",
    "categorical_sample",
    "categorical_sample_rows",
    "check_probability",
    "check_scale",
    "empirical_frequencies",
    "normal_logpdf",
    "normal_sample",
    "uniform_sample",
]
