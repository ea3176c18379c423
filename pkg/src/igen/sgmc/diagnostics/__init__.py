from .ess import MIN_DRAWS, EssEstimate, autocorrelation, effective_sample_size, lag1_autocorrelation, multivariate_ess
from .report import (
    METRICS,
    WALL_TIME_CAVEAT,
    footer,
    parameters_frame,
    render_table,
    to_frame,
    write_parameters_csv,
    write_report_csv,
    write_table,
)
from .summary import (
    ESS_REDUCTION,
    canonicalize_gmm,
    compare_posterior_means,
    mean_and_sd,
    posterior_summary,
    summarize,
)

__all__ = [
    "ESS_REDUCTION",
    "METRICS",
    "MIN_DRAWS",
    "WALL_TIME_CAVEAT",
    "EssEstimate",
    "autocorrelation",
    "canonicalize_gmm",
    "compare_posterior_means",
    "effective_sample_size",
    "footer",
    "lag1_autocorrelation",
    "mean_and_sd",
    "multivariate_ess",
    "parameters_frame",
    "posterior_summary",
    "render_table",
    "summarize",
    "to_frame",
    "write_parameters_csv",
    "write_report_csv",
    "write_table",
]
