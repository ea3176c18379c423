from __future__ import annotations

from dataclasses import dataclass
from typing import Optional


@dataclass(frozen=True)
class CheckResult:
    """Outcome of one consistency suite: the worst error seen against its tolerance.

    ``max_absolute_error`` is set by suites whose tolerance applies to a scaled error.
    """

    name: str
    model: str
    passed: bool
    max_error: float
    tolerance: float
    trials: int
    max_absolute_error: Optional[float] = None

    def __str__(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        line = (
            f"{status}  {self.model:<11} {self.name:<14} "
            f"max error {self.max_error:.3e} (tolerance {self.tolerance:.0e}, {self.trials} trials)"
        )
        if self.max_absolute_error is not None:
            line += f", max absolute error {self.max_absolute_error:.3e}"
        return line
