from .check_result import CheckResult
from .run_checks import run_checks
from .suites import (
    ENUMERATION_TOLERANCE,
    GRADIENT_ABSOLUTE_FLOOR,
    GRADIENT_TOLERANCE,
    UNBIASEDNESS_TOLERANCE,
    enumeration_check,
    gradient_check,
    gradient_error,
    unbiasedness_check,
)

__all__ = [
    "ENUMERATION_TOLERANCE",
    "GRADIENT_ABSOLUTE_FLOOR",
    "GRADIENT_TOLERANCE",
    "UNBIASEDNESS_TOLERANCE",
    "CheckResult",
    "enumeration_check",
    "gradient_check",
    "gradient_error",
    "run_checks",
    "unbiasedness_check",
]
