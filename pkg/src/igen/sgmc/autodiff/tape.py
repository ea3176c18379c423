"""Reverse-mode tape and the variables recorded on it."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional, Sequence

import numpy as np

from igen.sgmc.error import EvaluationError, UsageError

Vjp = Callable[[np.ndarray], np.ndarray]


@dataclass(frozen=True, slots=True)
class Node:
    op: str
    shape: tuple[int, ...]
    parents: tuple[int, ...]
    vjps: tuple[Vjp, ...]


def unbroadcast(adjoint: np.ndarray, shape: tuple[int, ...]) -> np.ndarray:
    """Sum ``adjoint`` over the axes numpy broadcasting added to reach its shape."""
    result = adjoint
    while result.ndim > len(shape):
        result = result.sum(axis=0)
    for axis, size in enumerate(shape):
        if size == 1 and result.shape[axis] != 1:
            result = result.sum(axis=axis, keepdims=True)
    return result.reshape(shape)


class Tape:
    """Append-only operation log for a single gradient evaluation.

    Nodes are stored in creation order, so parents always precede children. A
    tape is never reused: :func:`igen.sgmc.autodiff.grad` builds a fresh one per call.
    """

    __slots__ = ("_nodes",)

    def __init__(self):
        self._nodes: list[Node] = []

    def __len__(self) -> int:
        return len(self._nodes)

    def input(self, values: np.ndarray) -> "Variable":
        """Register the trace vector as the tape's input node."""
        if self._nodes:
            raise UsageError("inputs must be registered before any operation is recorded")
        array = np.array(values, dtype=np.float64)
        self._nodes.append(Node("input", array.shape, (), ()))
        return Variable(array, self, 0)

    def record(self, op: str, value: np.ndarray, parents: Sequence[tuple["Variable", Vjp]]) -> "Variable":
        node_id = len(self._nodes)
        if not np.all(np.isfinite(value)):
            raise EvaluationError(f"non-finite value produced by '{op}'", context={"op": op, "node": node_id})

        ids = []
        vjps = []
        for parent, vjp in parents:
            if parent.tape is not self:
                raise UsageError("variables from different tapes cannot be combined")
            ids.append(parent.node)
            vjps.append(vjp)

        self._nodes.append(Node(op, np.shape(value), tuple(ids), tuple(vjps)))
        return Variable(value, self, node_id)

    def backward(self, output: "Variable") -> np.ndarray:
        """Propagate adjoints from ``output`` back to the input node."""
        if output.tape is not self or output.node is None:
            raise UsageError("output was not recorded on this tape")

        adjoints: list[Optional[np.ndarray]] = [None] * len(self._nodes)
        adjoints[output.node] = np.ones(np.shape(output.value))

        for node_id in range(output.node, -1, -1):
            adjoint = adjoints[node_id]
            if adjoint is None:
                continue
            node = self._nodes[node_id]
            for parent_id, vjp in zip(node.parents, node.vjps):
                contribution = unbroadcast(np.asarray(vjp(adjoint), dtype=np.float64), self._nodes[parent_id].shape)
                current = adjoints[parent_id]
                adjoints[parent_id] = contribution if current is None else current + contribution

        gradient = adjoints[0]
        return np.zeros(self._nodes[0].shape) if gradient is None else gradient


class Variable:
    """A value tracked by a :class:`Tape`; with no tape it is a constant (``node`` is ``None``)."""

    __slots__ = ("value", "tape", "node")
    __array_ufunc__ = None

    def __init__(self, value, tape: Optional[Tape] = None, node: Optional[int] = None):
        self.value = np.asarray(value, dtype=np.float64)
        self.tape = tape
        self.node = node

    @property
    def shape(self) -> tuple[int, ...]:
        return self.value.shape

    @property
    def size(self) -> int:
        return int(self.value.size)

    @property
    def tracked(self) -> bool:
        return self.tape is not None

    def __float__(self) -> float:
        return float(self.value)

    def __len__(self) -> int:
        return len(self.value)

    def __repr__(self) -> str:
        mode = f"node={self.node}" if self.tracked else "constant"
        return f"Variable({self.value!r}, {mode})"

    # arithmetic operators are bound in ops.py
