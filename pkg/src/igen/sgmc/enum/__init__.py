from .model_kind import ModelKind, ModelKindEnum
from .nuisance_kernel import NuisanceKernel
from .scheme import Scheme, SchemeEnum
from .scheme_family import SchemeFamily

__all__ = [
    "ModelKind",
    "ModelKindEnum",
    "NuisanceKernel",
    "Scheme",
    "SchemeEnum",
    "SchemeFamily",
]
