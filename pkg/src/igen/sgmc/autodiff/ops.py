"""Differentiable primitives. Each contributes closed-form local partials to the tape."""

from __future__ import annotations

from typing import Any, Sequence

import numpy as np
from scipy import special

from igen.sgmc.distributions import densities
from igen.sgmc.error import EvaluationError

from .tape import Variable, Vjp

Operand = Variable | float | int | np.ndarray


def as_variable(value: Operand) -> Variable:
    return value if isinstance(value, Variable) else Variable(value)


def _result(op: str, value: Any, parents: Sequence[tuple[Variable, Vjp]]) -> Variable:
    value = np.asarray(value, dtype=np.float64)
    tracked = [(parent, vjp) for parent, vjp in parents if parent.tracked]
    if tracked:
        return tracked[0][0].tape.record(op, value, tracked)
    if not np.all(np.isfinite(value)):
        raise EvaluationError(f"non-finite value produced by '{op}'", context={"op": op})
    return Variable(value)


def _expand(values: np.ndarray, axis: int | None) -> np.ndarray:
    return values if axis is None else np.expand_dims(values, axis)


def add(a: Operand, b: Operand) -> Variable:
    a, b = as_variable(a), as_variable(b)
    return _result("add", a.value + b.value, [(a, lambda g: g), (b, lambda g: g)])


def sub(a: Operand, b: Operand) -> Variable:
    a, b = as_variable(a), as_variable(b)
    return _result("sub", a.value - b.value, [(a, lambda g: g), (b, lambda g: -g)])


def mul(a: Operand, b: Operand) -> Variable:
    a, b = as_variable(a), as_variable(b)
    return _result("mul", a.value * b.value, [(a, lambda g: g * b.value), (b, lambda g: g * a.value)])


def div(a: Operand, b: Operand) -> Variable:
    a, b = as_variable(a), as_variable(b)
    if np.any(b.value == 0.0):
        raise EvaluationError("division by zero", context={"op": "div"})
    quotient = a.value / b.value
    return _result("div", quotient, [(a, lambda g: g / b.value), (b, lambda g: -g * quotient / b.value)])


def neg(a: Operand) -> Variable:
    a = as_variable(a)
    return _result("neg", -a.value, [(a, lambda g: -g)])


def exp(a: Operand) -> Variable:
    a = as_variable(a)
    value = np.exp(a.value)
    return _result("exp", value, [(a, lambda g: g * value)])


def log(a: Operand) -> Variable:
    a = as_variable(a)
    if np.any(a.value <= 0.0):
        raise EvaluationError("log of a non-positive value", context={"op": "log"})
    return _result("log", np.log(a.value), [(a, lambda g: g / a.value)])


def sigmoid(a: Operand) -> Variable:
    a = as_variable(a)
    value = special.expit(a.value)
    return _result("sigmoid", value, [(a, lambda g: g * value * (1.0 - value))])


def log_sigmoid(a: Operand) -> Variable:
    a = as_variable(a)
    value = -np.logaddexp(0.0, -a.value)
    return _result("log_sigmoid", value, [(a, lambda g: g * special.expit(-a.value))])


def sum(a: Operand, axis: int | None = None) -> Variable:  # noqa: A001
    a = as_variable(a)
    return _result("sum", np.sum(a.value, axis=axis), [(a, lambda g: np.broadcast_to(_expand(g, axis), a.shape))])


def take(a: Operand, index: Any) -> Variable:
    a = as_variable(a)
    if isinstance(index, tuple):
        index = tuple(np.asarray(part) if isinstance(part, (list, np.ndarray)) else part for part in index)
    elif isinstance(index, (list, np.ndarray)):
        index = np.asarray(index)

    def vjp(g: np.ndarray) -> np.ndarray:
        adjoint = np.zeros(a.shape)
        np.add.at(adjoint, index, g)
        return adjoint

    return _result("take", a.value[index], [(a, vjp)])


def reshape(a: Operand, shape: tuple[int, ...]) -> Variable:
    a = as_variable(a)
    return _result("reshape", a.value.reshape(shape), [(a, lambda g: np.reshape(g, a.shape))])


def stack(parts: Sequence[Operand], axis: int = -1) -> Variable:
    """Join equally shaped operands along a new ``axis``."""
    variables = [as_variable(part) for part in parts]
    value = np.stack([variable.value for variable in variables], axis=axis)
    return _result(
        "stack",
        value,
        [(variable, lambda g, i=i: np.take(g, i, axis=axis)) for i, variable in enumerate(variables)],
    )


def log_sum_exp(a: Operand, axis: int | None = None) -> Variable:
    a = as_variable(a)
    with np.errstate(divide="ignore"):
        value = special.logsumexp(a.value, axis=axis)
    weights = np.exp(a.value - _expand(value, axis))
    return _result("log_sum_exp", value, [(a, lambda g: _expand(g, axis) * weights)])


def log_softmax(a: Operand, axis: int = -1) -> Variable:
    a = as_variable(a)
    value = special.log_softmax(a.value, axis=axis)
    probabilities = np.exp(value)
    return _result(
        "log_softmax",
        value,
        [(a, lambda g: g - probabilities * np.sum(g, axis=axis, keepdims=True))],
    )


def normal_logpdf(mu: Operand, sigma: Operand, v: Operand) -> Variable:
    """Normal log-density as a single node with partials in ``mu``, ``sigma`` and ``v``."""
    mu, sigma, v = as_variable(mu), as_variable(sigma), as_variable(v)
    if sigma.tracked and not np.all(np.isfinite(sigma.value) & (sigma.value > 0.0)):
        raise EvaluationError(
            "scale left the positive reals", context={"op": "normal_logpdf", "sigma": np.ravel(sigma.value).tolist()}
        )
    value = densities.normal_logpdf(mu.value, sigma.value, v.value)
    residual = v.value - mu.value
    precision = 1.0 / (sigma.value * sigma.value)
    return _result(
        "normal_logpdf",
        value,
        [
            (mu, lambda g: g * residual * precision),
            (sigma, lambda g: g * (residual * residual * precision - 1.0) / sigma.value),
            (v, lambda g: -g * residual * precision),
        ],
    )


def bernoulli_logpmf(p: Operand, outcome: bool | np.ndarray) -> Variable:
    p = as_variable(p)
    observed = np.asarray(outcome, dtype=bool)
    value = densities.bernoulli_logpmf(p.value, observed)
    with np.errstate(divide="ignore"):
        partial = np.where(observed, 1.0 / p.value, -1.0 / (1.0 - p.value))
    return _result("bernoulli_logpmf", value, [(p, lambda g: g * partial)])


def beta_logpdf(a: float, b: float, v: Operand) -> Variable:
    v = as_variable(v)
    value = densities.beta_logpdf(a, b, v.value)
    with np.errstate(divide="ignore", invalid="ignore"):
        partial = (a - 1.0) / v.value - (b - 1.0) / (1.0 - v.value)
    return _result("beta_logpdf", value, [(v, lambda g: g * np.nan_to_num(partial))])


Variable.__add__ = lambda self, other: add(self, other)
Variable.__radd__ = lambda self, other: add(other, self)
Variable.__sub__ = lambda self, other: sub(self, other)
Variable.__rsub__ = lambda self, other: sub(other, self)
Variable.__mul__ = lambda self, other: mul(self, other)
Variable.__rmul__ = lambda self, other: mul(other, self)
Variable.__truediv__ = lambda self, other: div(self, other)
Variable.__rtruediv__ = lambda self, other: div(other, self)
Variable.__neg__ = lambda self: neg(self)
Variable.__getitem__ = lambda self, index: take(self, index)
Variable.sum = lambda self, axis=None: sum(self, axis)
Variable.reshape = lambda self, *shape: reshape(
    self, shape[0] if len(shape) == 1 and isinstance(shape[0], tuple) else shape
)

__all__ = [
    "add",
    "as_variable",
    "bernoulli_logpmf",
    "beta_logpdf",
    "div",
    "exp",
    "log",
    "log_sigmoid",
    "log_softmax",
    "log_sum_exp",
    "mul",
    "neg",
    "normal_logpdf",
    "reshape",
    "sigmoid",
    "stack",
    "sub",
    "sum",
    "take",
]
