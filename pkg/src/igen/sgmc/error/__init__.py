from .evaluation_error import EvaluationError
from .sgmc_error import SgmcError
from .usage_error import UsageError

__all__ = [
    "EvaluationError",
    "SgmcError",
    "UsageError",
]
