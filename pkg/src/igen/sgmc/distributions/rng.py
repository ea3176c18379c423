"""Reproducible, splittable random streams."""

from __future__ import annotations

import numpy as np
from numpy.random import Generator, Philox, SeedSequence

from igen.sgmc.error import UsageError

ALGORITHM = "philox"


class Rng:
    """Counter-based random stream identified by ``(seed, stream_id)``.

    Identical pairs replay identical draws on every platform; distinct stream ids
    are spawned from the same :class:`~numpy.random.SeedSequence` and never overlap.
    """

    __slots__ = ("seed", "stream_id", "generator")

    algorithm = ALGORITHM

    def __init__(self, seed: int, stream_id: int = 0):
        if seed < 0 or stream_id < 0:
            raise UsageError("seed and stream_id must be non-negative", context={"seed": seed, "stream": stream_id})

        self.seed = int(seed)
        self.stream_id = int(stream_id)
        sequence = SeedSequence(entropy=self.seed, spawn_key=(self.stream_id,))
        self.generator: Generator = Generator(Philox(sequence))

    def spawn(self, stream_id: int) -> "Rng":
        """Return an independent stream sharing this seed."""
        return Rng(self.seed, stream_id)

    def uniform(self, low: float = 0.0, high: float = 1.0, size: int | tuple[int, ...] | None = None):
        return self.generator.uniform(low, high, size)

    def normal(self, loc: float = 0.0, scale: float = 1.0, size: int | tuple[int, ...] | None = None):
        return self.generator.normal(loc, scale, size)

    def random(self, size: int | tuple[int, ...] | None = None):
        return self.generator.random(size)

    def integers(self, low: int, high: int, size: int | tuple[int, ...] | None = None):
        return self.generator.integers(low, high, size)

    def __repr__(self) -> str:
        return f"Rng(seed={self.seed}, stream_id={self.stream_id}, algorithm={self.algorithm!r})"


def empirical_frequencies(indices: np.ndarray, size: int) -> np.ndarray:
    """Relative frequency of each index in ``range(size)``."""
    counts = np.bincount(np.asarray(indices, dtype=np.int64), minlength=size)
    return counts / max(counts.sum(), 1)
