"""Reverse-mode differentiation of log-densities with respect to the trace."""

from . import ops
from .gradient import LogDensity, evaluate, finite_difference_gradient, grad
from .ops import (
    as_variable,
    bernoulli_logpmf,
    beta_logpdf,
    exp,
    log,
    log_sigmoid,
    log_softmax,
    log_sum_exp,
    normal_logpdf,
    reshape,
    sigmoid,
    stack,
    take,
)
from .tape import Node, Tape, Variable, unbroadcast

__all__ = [
    "LogDensity",
    "Node",
    "Tape",
    "Variable",
    "as_variable",
    "bernoulli_logpmf",
    "beta_logpdf",
    "evaluate",
    "exp",
    "finite_difference_gradient",
    "grad",
    "log",
    "log_sigmoid",
    "log_softmax",
    "log_sum_exp",
    "normal_logpdf",
    "ops",
    "reshape",
    "sigmoid",
    "stack",
    "take",
    "unbroadcast",
]
