"""Stochastic-gradient HMC for probabilistic programs with a discrete nuisance state."""

from .autodiff import Variable, evaluate, grad
from .diagnostics import EssEstimate, effective_sample_size, summarize
from .distributions import Rng
from .domain import Chain, DiagnosticsReport, GradientEstimate, RunSpec, SamplerConfig
from .enum import ModelKind, NuisanceKernel, Scheme
from .error import EvaluationError, SgmcError, UsageError
from .estimator import ExactGradientSource, GradientEstimator, estimate_gradient
from .model import log_joint, marginal_log_density, resample_nuisance
from .sampler import composing_mh_hmc, hmc, run_scheme, sghmc
from .service import LoggerService
from .singleton import Singleton
from .zoo import ModelRegistry

__all__ = [
    "Chain",
    "DiagnosticsReport",
    "EssEstimate",
    "EvaluationError",
    "ExactGradientSource",
    "GradientEstimate",
    "GradientEstimator",
    "LoggerService",
    "ModelKind",
    "ModelRegistry",
    "NuisanceKernel",
    "Rng",
    "RunSpec",
    "SamplerConfig",
    "Scheme",
    "SgmcError",
    "Singleton",
    "UsageError",
    "Variable",
    "composing_mh_hmc",
    "effective_sample_size",
    "estimate_gradient",
    "evaluate",
    "grad",
    "hmc",
    "log_joint",
    "marginal_log_density",
    "resample_nuisance",
    "run_scheme",
    "sghmc",
    "summarize",
]
