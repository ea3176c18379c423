from typing import Any, Mapping, Optional

from .sgmc_error import SgmcError


class EvaluationError(SgmcError, ArithmeticError):
    """Raised when a density, gradient or chain leaves the finite reals."""

    def __init__(
        self, message: str, from_exception: Optional[Exception] = None, context: Optional[Mapping[str, Any]] = None
    ):
        super().__init__(message, exit_code=1, from_exception=from_exception, context=context)
