from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Callable, Mapping, Optional

import numpy as np

from igen.sgmc.diagnostics import canonicalize_gmm
from igen.sgmc.distributions import Rng
from igen.sgmc.domain import GmmData, HmmData, Observations, SurveyData, TwoNormalsData, read_lines
from igen.sgmc.enum import ModelKind, ModelKindEnum
from igen.sgmc.error import UsageError
from igen.sgmc.model import MarginalizedModel, StochasticModel
from igen.sgmc.singleton import Singleton

from .gmm import GmmModel, MarginalizedGmmModel, generate_gmm
from .hmm import HmmModel, MarginalizedHmmModel, generate_hmm
from .survey import MarginalizedSurveyModel, SurveyModel, generate_survey
from .two_normals import MarginalizedTwoNormalsModel, TwoNormalsModel

DATA_SEED = 0
SHIPPED_DATA = Path(__file__).parent / "data"


def _identity(constrained: np.ndarray) -> np.ndarray:
    return constrained


@dataclass(frozen=True)
class ModelEntry:
    """Everything the harness needs to build, simulate and post-process one program."""

    kind: ModelKind
    data_type: type
    stochastic: Callable[[Observations], StochasticModel]
    marginalized: Callable[[Observations], MarginalizedModel]
    generate: Callable[..., Observations]
    defaults: Mapping[str, Any] = field(default_factory=dict)
    canonicalize: Callable[[np.ndarray], np.ndarray] = _identity


class ModelRegistry(Singleton):
    """Lookup from :class:`ModelKind` to the programs and generators of the zoo."""

    def _setup(self) -> None:
        self._entries: dict[ModelKindEnum, ModelEntry] = {
            ModelKindEnum.SURVEY: ModelEntry(
                ModelKind.SURVEY,
                SurveyData,
                SurveyModel,
                MarginalizedSurveyModel,
                generate_survey,
                {"theta": 0.67, "n": 60},
            ),
            ModelKindEnum.GMM: ModelEntry(
                ModelKind.GMM,
                GmmData,
                GmmModel,
                MarginalizedGmmModel,
                generate_gmm,
                {"n": 100},
                canonicalize_gmm,
            ),
            ModelKindEnum.HMM: ModelEntry(
                ModelKind.HMM,
                HmmData,
                HmmModel,
                MarginalizedHmmModel,
                generate_hmm,
                {"t": 16, "k": 3, "noise": 0.5, "self_transition": 0.8},
            ),
            ModelKindEnum.TWONORMALS: ModelEntry(
                ModelKind.TWONORMALS,
                TwoNormalsData,
                TwoNormalsModel,
                MarginalizedTwoNormalsModel,
                lambda rng: TwoNormalsData(),
            ),
        }

    def entry(self, kind: ModelKind | ModelKindEnum | str) -> ModelEntry:
        resolved = kind if isinstance(kind, ModelKind) else ModelKind.from_value(kind)
        if resolved is None:
            names = ", ".join(str(known) for known in ModelKind.KINDS)
            raise UsageError(f"unknown model: {kind!r} (expected one of {names})")
        return self._entries[resolved.value]

    def stochastic(self, kind: ModelKind | str, data: Observations) -> StochasticModel:
        return self.entry(kind).stochastic(data)

    def marginalized(self, kind: ModelKind | str, data: Observations) -> MarginalizedModel:
        return self.entry(kind).marginalized(data)

    def generator_params(self, kind: ModelKind | str, overrides: Optional[Mapping[str, str]] = None) -> dict[str, Any]:
        """Generator defaults with string ``overrides`` converted to each default's type."""
        defaults = dict(self.entry(kind).defaults)
        for key, raw in (overrides or {}).items():
            if key not in defaults:
                raise UsageError(f"unknown generator parameter: {key}", context={"model": str(kind)})
            try:
                defaults[key] = type(defaults[key])(raw)
            except ValueError as error:
                raise UsageError(f"invalid value for {key}: {raw!r}", from_exception=error) from error
        return defaults

    def generate(self, kind: ModelKind | str, seed: int = DATA_SEED, **params: Any) -> Observations:
        entry = self.entry(kind)
        return entry.generate(Rng(seed), **{**entry.defaults, **params})

    def parse(self, kind: ModelKind | str, lines: list[str]) -> Observations:
        return self.entry(kind).data_type.from_lines(lines)

    def shipped_path(self, kind: ModelKind | str) -> Path:
        """Location of the dataset shipped for ``kind``, written by ``sgmc-bench generate`` with the data seed."""
        return SHIPPED_DATA / f"{self.entry(kind).kind}.txt"

    def default_source(self, kind: ModelKind | str) -> str:
        shipped = self.shipped_path(kind)
        return str(shipped) if shipped.is_file() else f"generated with seed {DATA_SEED}"

    def load(self, kind: ModelKind | str, path: Optional[Path | str] = None) -> Observations:
        """Read a dataset file; without one, the shipped dataset, or the default simulation when none is shipped."""
        if path is None:
            shipped = self.shipped_path(kind)
            if not shipped.is_file():
                return self.generate(kind)
            path = shipped
        return self.parse(kind, read_lines(path))

    def small_instance(self, kind: ModelKind | str, data: Observations) -> Observations:
        """Leading observations of ``data``, few enough to enumerate every nuisance state."""
        return data.head(self.entry(kind).kind.check_size)

    def canonicalize(self, kind: ModelKind | str, constrained: np.ndarray) -> np.ndarray:
        return self.entry(kind).canonicalize(constrained)
