from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import ClassVar, Iterable, Optional


class ModelKindEnum(Enum):
    """Probabilistic programs shipped with the package."""

    SURVEY = "survey"
    GMM = "gmm"
    HMM = "hmm"
    TWONORMALS = "twonormals"


@dataclass(frozen=True)
class ModelKind:
    value: ModelKindEnum
    benchmarked_marginal: bool
    check_size: int

    _registry: ClassVar[list["ModelKind"]] = []

    SURVEY: ClassVar["ModelKind"]
    GMM: ClassVar["ModelKind"]
    HMM: ClassVar["ModelKind"]
    TWONORMALS: ClassVar["ModelKind"]

    KINDS: ClassVar[tuple["ModelKind", ...]]

    def __post_init__(self):
        self.__class__._registry.append(self)

    def __str__(self) -> str:
        return self.value.value

    @property
    def is_illustration(self) -> bool:
        """Whether the model only illustrates mode switching and has no marginalized benchmark entry."""
        return not self.benchmarked_marginal

    @classmethod
    def _kinds(cls) -> Iterable["ModelKind"]:
        return cls._registry

    @classmethod
    def from_value(cls, value: Optional[str | ModelKindEnum]) -> Optional["ModelKind"]:
        if value is None:
            return None

        value_str = value.value if isinstance(value, ModelKindEnum) else str(value).lower()
        for kind in cls._registry:
            if kind.value.value == value_str:
                return kind
        return None


# check_size: observations kept when the consistency suites enumerate every nuisance state
ModelKind.SURVEY = ModelKind(ModelKindEnum.SURVEY, True, 5)
ModelKind.GMM = ModelKind(ModelKindEnum.GMM, True, 6)
ModelKind.HMM = ModelKind(ModelKindEnum.HMM, True, 4)
ModelKind.TWONORMALS = ModelKind(ModelKindEnum.TWONORMALS, False, 1)

ModelKind.KINDS = tuple(ModelKind._kinds())
