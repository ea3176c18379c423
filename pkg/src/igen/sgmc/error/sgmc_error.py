from typing import Any, Mapping, Optional


class SgmcError(Exception):
    def __init__(
        self,
        message: str,
        exit_code: int = 1,
        from_exception: Optional[Exception] = None,
        context: Optional[Mapping[str, Any]] = None,
    ):
        super().__init__(message)

        self.message = message
        self.exit_code = exit_code
        self.context: dict[str, Any] = dict(context or {})

        if from_exception is not None:
            self.__cause__ = from_exception

    def __str__(self) -> str:
        full_message = f"{self.message}\nExit Code: {self.exit_code}"

        for key, value in self.context.items():
            full_message += f"\n{key}: {value}"

        cause = getattr(self, "__cause__", None)

        while cause:
            full_message += f"\nCaused by: {cause}"
            cause = getattr(cause, "__cause__", None)

        return full_message
