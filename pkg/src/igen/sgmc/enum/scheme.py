from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import ClassVar, Iterable, Optional

from .scheme_family import SchemeFamily


class SchemeEnum(Enum):
    """Inference schemes compared by the benchmark, in report column order."""

    SGHMC1 = "sghmc1"
    SGHMC10 = "sghmc10"
    MH_HMC = "mh-hmc"
    HMC_MARG = "hmc-marg"


@dataclass(frozen=True)
class Scheme:
    value: SchemeEnum
    label: str
    family: SchemeFamily
    grad_samples: int

    _registry: ClassVar[list["Scheme"]] = []

    SGHMC1: ClassVar["Scheme"]
    SGHMC10: ClassVar["Scheme"]
    MH_HMC: ClassVar["Scheme"]
    HMC_MARG: ClassVar["Scheme"]

    SCHEMES: ClassVar[tuple["Scheme", ...]]

    def __post_init__(self):
        self.__class__._registry.append(self)

    def __str__(self) -> str:
        return self.value.value

    @property
    def requires_marginalized(self) -> bool:
        return self.family == SchemeFamily.HMC

    @property
    def is_stochastic_gradient(self) -> bool:
        return self.family == SchemeFamily.SGHMC

    @property
    def stream_offset(self) -> int:
        """Base stream id for this scheme's replicas; replicas add their index."""
        return (self.SCHEMES.index(self) + 1) * 10_000

    @classmethod
    def _schemes(cls) -> Iterable["Scheme"]:
        return cls._registry

    @classmethod
    def from_value(cls, value: Optional[str | SchemeEnum]) -> Optional["Scheme"]:
        if value is None:
            return None

        value_str = value.value if isinstance(value, SchemeEnum) else str(value).lower()
        for scheme in cls._registry:
            if scheme.value.value == value_str:
                return scheme
        return None


Scheme.SGHMC1 = Scheme(SchemeEnum.SGHMC1, "sgHMC-1", SchemeFamily.SGHMC, 1)
Scheme.SGHMC10 = Scheme(SchemeEnum.SGHMC10, "sgHMC-10", SchemeFamily.SGHMC, 10)
Scheme.MH_HMC = Scheme(SchemeEnum.MH_HMC, "MH+HMC", SchemeFamily.COMPOSING, 1)
Scheme.HMC_MARG = Scheme(SchemeEnum.HMC_MARG, "HMC-marginalized", SchemeFamily.HMC, 1)

Scheme.SCHEMES = tuple(Scheme._schemes())
