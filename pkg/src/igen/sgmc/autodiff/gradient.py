"""Entry points that evaluate a log-density on a fresh tape."""

from __future__ import annotations

from typing import Callable

import numpy as np
from numpy.typing import ArrayLike

from igen.sgmc.error import EvaluationError, UsageError

from .ops import as_variable
from .tape import Tape, Variable

LogDensity = Callable[[Variable], Variable | float]


def _as_trace(x: ArrayLike, expected_dim: int | None) -> np.ndarray:
    values = np.array(x, dtype=np.float64)
    if values.ndim != 1:
        raise UsageError("trace must be a vector", context={"shape": values.shape})
    if expected_dim is not None and values.size != expected_dim:
        raise UsageError(
            "trace dimension mismatch", context={"expected": expected_dim, "actual": values.size}
        )
    return values


def grad(f: LogDensity, x: ArrayLike, expected_dim: int | None = None) -> tuple[float, np.ndarray]:
    """Return ``(f(x), df/dx)`` with one reverse sweep over a tape built for this call only."""
    values = _as_trace(x, expected_dim)
    tape = Tape()
    trace = tape.input(values)

    try:
        output = as_variable(f(trace))
    except EvaluationError as error:
        error.context.setdefault("trace", values.tolist())
        raise

    if output.value.ndim != 0:
        raise UsageError("log-density must evaluate to a scalar", context={"shape": output.shape})
    if not np.isfinite(output.value):
        raise EvaluationError("log-density is not finite", context={"trace": values.tolist()})

    if output.tape is None:
        return float(output.value), np.zeros_like(values)

    gradient = tape.backward(output)
    if not np.all(np.isfinite(gradient)):
        raise EvaluationError("gradient is not finite", context={"trace": values.tolist()})
    return float(output.value), gradient


def evaluate(f: LogDensity, x: ArrayLike, expected_dim: int | None = None) -> float:
    """Evaluate ``f`` in constant mode, without recording a tape."""
    values = _as_trace(x, expected_dim)
    try:
        output = as_variable(f(Variable(values)))
    except EvaluationError as error:
        error.context.setdefault("trace", values.tolist())
        raise
    return float(output.value)


def finite_difference_gradient(f: LogDensity, x: ArrayLike, h: float = 1e-3) -> np.ndarray:
    """Five-point central differences of ``f`` at ``x``; used as the oracle for :func:`grad`."""
    values = _as_trace(x, None)
    gradient = np.empty_like(values)
    for i in range(values.size):
        step = np.zeros_like(values)
        step[i] = h
        forward = 8.0 * evaluate(f, values + step) - evaluate(f, values + 2.0 * step)
        backward = 8.0 * evaluate(f, values - step) - evaluate(f, values - 2.0 * step)
        gradient[i] = (forward - backward) / (12.0 * h)
    return gradient
