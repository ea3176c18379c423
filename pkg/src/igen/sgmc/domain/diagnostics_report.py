from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional


@dataclass(frozen=True)
class ParameterSummary:
    name: str
    mean: float
    sd: float
    mcse: float
    ess: float


@dataclass(frozen=True)
class SchemeSummary:
    """Replica statistics for one scheme, the row behind each column of the ESS/time tables."""

    scheme: str
    label: str
    replicas: int
    ess_mean: float
    ess_sd: float
    wall_time_mean: float
    wall_time_sd: float
    ess_per_second: float
    gradient_evaluations_mean: float
    likelihood_terms_mean: float
    divergent_mean: float
    acceptance_mean: float
    degenerate: bool = False


@dataclass(frozen=True)
class DiagnosticsReport:
    model: str
    schemes: tuple[SchemeSummary, ...]
    parameters: dict[str, tuple[ParameterSummary, ...]]
    metadata: dict[str, str] = field(default_factory=dict)

    def scheme(self, name: str) -> Optional[SchemeSummary]:
        return next((summary for summary in self.schemes if summary.scheme == name), None)

    def parameter(self, scheme: str, name: str) -> Optional[ParameterSummary]:
        return next((summary for summary in self.parameters.get(scheme, ()) if summary.name == name), None)
