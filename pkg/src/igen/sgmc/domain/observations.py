"""Observed data ``y`` for each program, with the one-record-per-line text format."""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import ClassVar, Iterable, Optional, Protocol, runtime_checkable

import numpy as np
from igen.shared.string_utils import is_blank

from igen.sgmc.error import UsageError

_COMMENT = "#"
_HEADER_REGEX = re.compile(r"^K=(?P<k>\d+)(\s+noise=(?P<noise>\S+))?$")


@runtime_checkable
class ObservationsProtocol(Protocol):
    """Structural typing contract for observation containers."""

    @property
    def size(self) -> int:
        """Number of observations (or time steps)."""
        ...

    @classmethod
    def from_lines(cls, lines: Iterable[str]) -> "ObservationsProtocol":
        """Parse the text format, ignoring blank lines and ``#`` comments."""
        ...

    def to_lines(self) -> list[str]:
        """Render the records (and header, if any) without comments."""
        ...


def _records(lines: Iterable[str]) -> list[str]:
    return [line.strip() for line in lines if not is_blank(line) and not line.strip().startswith(_COMMENT)]


def _parse_reals(records: Iterable[str]) -> np.ndarray:
    try:
        return np.array([float(record) for record in records], dtype=np.float64)
    except ValueError as error:
        raise UsageError("observation lines must hold one real number", from_exception=error) from error


def _frozen(values: Iterable, dtype) -> np.ndarray:
    array = np.array(values, dtype=dtype)
    array.setflags(write=False)
    return array


def _parse_header(record: str) -> tuple[int, Optional[float]]:
    match = _HEADER_REGEX.fullmatch(record)
    if match is None:
        raise UsageError(f"invalid header line: {record!r}")
    noise = match.group("noise")
    return int(match.group("k")), None if noise is None else float(noise)


@dataclass(frozen=True, eq=False)
class SurveyData:
    """Boolean answers to the compensation question."""

    answers: np.ndarray = field(default_factory=lambda: _frozen([], bool))

    def __post_init__(self):
        object.__setattr__(self, "answers", _frozen(self.answers, bool))

    @property
    def size(self) -> int:
        return int(self.answers.size)

    @classmethod
    def from_lines(cls, lines: Iterable[str]) -> "SurveyData":
        records = _records(lines)
        invalid = [record for record in records if record not in {"0", "1"}]
        if invalid:
            raise UsageError("survey lines must be 0 or 1", context={"line": invalid[0]})
        return cls(np.array([record == "1" for record in records], dtype=bool))

    def to_lines(self) -> list[str]:
        return ["1" if answer else "0" for answer in self.answers]

    def head(self, n: int) -> "SurveyData":
        return SurveyData(self.answers[:n])


@dataclass(frozen=True, eq=False)
class GmmData:
    """Real observations drawn from a mixture of ``n_components`` normals."""

    values: np.ndarray
    n_components: int = 2

    MIN_COMPONENTS: ClassVar[int] = 1

    def __post_init__(self):
        object.__setattr__(self, "values", _frozen(self.values, np.float64))
        if self.values.size == 0:
            raise UsageError("gmm data must not be empty")
        if self.n_components < self.MIN_COMPONENTS:
            raise UsageError("gmm needs at least one component", context={"K": self.n_components})

    @property
    def size(self) -> int:
        return int(self.values.size)

    @classmethod
    def from_lines(cls, lines: Iterable[str], n_components: int = 2) -> "GmmData":
        records = _records(lines)
        if records and records[0].startswith("K="):
            n_components, _ = _parse_header(records[0])
            records = records[1:]
        return cls(_parse_reals(records), n_components)

    def to_lines(self) -> list[str]:
        return [repr(float(value)) for value in self.values]

    def head(self, n: int) -> "GmmData":
        return GmmData(self.values[:n], self.n_components)


@dataclass(frozen=True, eq=False)
class HmmData:
    """Emissions of a hidden Markov chain with ``n_states`` states and a fixed emission sd."""

    values: np.ndarray
    n_states: int = 3
    noise: float = 0.5

    def __post_init__(self):
        object.__setattr__(self, "values", _frozen(self.values, np.float64))
        if self.values.size == 0:
            raise UsageError("hmm data must not be empty")
        if self.n_states < 1:
            raise UsageError("hmm needs at least one state", context={"K": self.n_states})
        if not self.noise > 0:
            raise UsageError("hmm noise must be positive", context={"noise": self.noise})

    @property
    def size(self) -> int:
        return int(self.values.size)

    @classmethod
    def from_lines(cls, lines: Iterable[str]) -> "HmmData":
        records = _records(lines)
        if not records or not records[0].startswith("K="):
            raise UsageError("hmm data requires a 'K=<n-states> noise=<sd>' header")
        n_states, noise = _parse_header(records[0])
        if noise is None:
            raise UsageError("hmm header must include noise=<sd>")
        return cls(_parse_reals(records[1:]), n_states, noise)

    def to_lines(self) -> list[str]:
        return [f"K={self.n_states} noise={self.noise!r}", *(repr(float(value)) for value in self.values)]

    def head(self, n: int) -> "HmmData":
        return HmmData(self.values[:n], self.n_states, self.noise)


@dataclass(frozen=True, eq=False)
class TwoNormalsData:
    """The two-component illustration conditions on nothing."""

    @property
    def size(self) -> int:
        return 0

    @classmethod
    def from_lines(cls, lines: Iterable[str]) -> "TwoNormalsData":
        return cls()

    def to_lines(self) -> list[str]:
        return []

    def head(self, n: int) -> "TwoNormalsData":
        return self


Observations = SurveyData | GmmData | HmmData | TwoNormalsData


def write_observations(path: Path | str, data: Observations, comment: Optional[str] = None) -> Path:
    """Write ``data`` to ``path``, preceded by a ``#`` comment line when given."""
    target = Path(path)
    target.parent.mkdir(parents=True, exist_ok=True)
    lines = ([f"{_COMMENT} {comment}"] if not is_blank(comment) else []) + data.to_lines()
    target.write_text("\n".join(lines) + "\n", encoding="utf-8")
    return target


def read_lines(path: Path | str) -> list[str]:
    source = Path(path)
    if not source.is_file():
        raise UsageError(f"dataset not found: {source}")
    return source.read_text(encoding="utf-8").splitlines()
