from .chain import Chain
from .diagnostics_report import DiagnosticsReport, ParameterSummary, SchemeSummary
from .gradient_estimate import GradientEstimate
from .observations import (
    GmmData,
    HmmData,
    Observations,
    ObservationsProtocol,
    SurveyData,
    TwoNormalsData,
    read_lines,
    write_observations,
)
from .run_spec import RunSpec
from .sampler_config import SamplerConfig

__all__ = [
    "Chain",
    "DiagnosticsReport",
    "GmmData",
    "GradientEstimate",
    "HmmData",
    "Observations",
    "ObservationsProtocol",
    "ParameterSummary",
    "RunSpec",
    "SamplerConfig",
    "SchemeSummary",
    "SurveyData",
    "TwoNormalsData",
    "read_lines",
    "write_observations",
]
