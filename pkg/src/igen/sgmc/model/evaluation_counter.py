from __future__ import annotations

from collections import Counter

LIKELIHOOD = "likelihood"
CONDITIONAL = "conditional"


class EvaluationCounter:
    """Counts elementary log-density terms a model evaluates, by kind.

    The count is a hardware-independent proxy for evaluation cost: a vectorized
    node over ``n`` observations counts ``n`` terms. Density calls count under
    :data:`LIKELIHOOD`, nuisance-kernel conditionals under :data:`CONDITIONAL`.
    """

    __slots__ = ("_counts",)

    def __init__(self):
        self._counts: Counter[str] = Counter()

    def add(self, kind: str, n: int = 1) -> None:
        self._counts[kind] += int(n)

    def __getitem__(self, kind: str) -> int:
        return self._counts[kind]

    @property
    def total(self) -> int:
        return sum(self._counts.values())

    def snapshot(self) -> dict[str, int]:
        return dict(self._counts)

    def reset(self) -> None:
        self._counts.clear()
