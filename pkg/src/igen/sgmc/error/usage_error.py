from typing import Any, Mapping, Optional

from .sgmc_error import SgmcError


class UsageError(SgmcError, ValueError):
    """Raised when a caller violates a documented precondition."""

    def __init__(
        self, message: str, from_exception: Optional[Exception] = None, context: Optional[Mapping[str, Any]] = None
    ):
        super().__init__(message, exit_code=2, from_exception=from_exception, context=context)
