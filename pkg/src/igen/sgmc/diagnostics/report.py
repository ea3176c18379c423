from __future__ import annotations

from dataclasses import asdict
from pathlib import Path

import pandas as pd

from igen.sgmc.domain import DiagnosticsReport

METRICS = (
    "ess_mean",
    "ess_sd",
    "wall_time_mean",
    "wall_time_sd",
    "ess_per_second",
    "gradient_evaluations_mean",
    "likelihood_terms_mean",
    "divergent_mean",
    "acceptance_mean",
)

WALL_TIME_CAVEAT = "Wall times depend on the host and are not comparable across machines."


def to_frame(report: DiagnosticsReport) -> pd.DataFrame:
    """One column per scheme label in report order, one row per metric."""
    columns = {summary.label: [asdict(summary)[metric] for metric in METRICS] for summary in report.schemes}
    frame = pd.DataFrame(columns, index=list(METRICS))
    frame.index.name = "metric"
    return frame


def parameters_frame(report: DiagnosticsReport) -> pd.DataFrame:
    rows = [
        {"scheme": scheme, **asdict(summary)}
        for scheme, summaries in report.parameters.items()
        for summary in summaries
    ]
    return pd.DataFrame(rows, columns=["scheme", "name", "mean", "sd", "mcse", "ess"])


def write_report_csv(report: DiagnosticsReport, path: Path | str) -> Path:
    target = Path(path)
    target.parent.mkdir(parents=True, exist_ok=True)
    to_frame(report).to_csv(target, float_format="%.10g")
    return target


def write_parameters_csv(report: DiagnosticsReport, path: Path | str) -> Path:
    """Posterior mean, sd, MCSE and ESS per scheme and parameter."""
    target = Path(path)
    target.parent.mkdir(parents=True, exist_ok=True)
    parameters_frame(report).to_csv(target, index=False, float_format="%.10g")
    return target


def _plus_minus(mean: float, sd: float, digits: int) -> str:
    return f"{mean:.{digits}f} ± {sd:.{digits}f}"


def footer(report: DiagnosticsReport) -> list[str]:
    """Likelihood-term ratios against the first scheme: the host-independent cost comparison."""
    if not report.schemes:
        return [WALL_TIME_CAVEAT]
    baseline = report.schemes[0]
    lines = [f"Likelihood terms per chain relative to {baseline.label}:"]
    for summary in report.schemes:
        ratio = summary.likelihood_terms_mean / baseline.likelihood_terms_mean if baseline.likelihood_terms_mean else 0.0
        lines.append(f"  {summary.label}: {ratio:.2f}x ({summary.likelihood_terms_mean:.0f} terms)")
    lines.append(f"ESS: {report.metadata.get('ess', 'per coordinate')}.")
    lines.append(WALL_TIME_CAVEAT)
    return lines


def render_table(report: DiagnosticsReport) -> str:
    """Aligned plain-text tables: ESS, computation time and ESS per second, one column per scheme."""
    rows = {
        "Effective sample size": [_plus_minus(s.ess_mean, s.ess_sd, 0) for s in report.schemes],
        "Computation time, seconds": [_plus_minus(s.wall_time_mean, s.wall_time_sd, 2) for s in report.schemes],
        "Effective sample size per second": [f"{s.ess_per_second:.1f}" for s in report.schemes],
    }
    frame = pd.DataFrame(rows, index=[s.label for s in report.schemes]).T
    body = frame.to_string()
    return "\n".join([f"Model: {report.model}", "", body, "", *footer(report)]) + "\n"


def write_table(report: DiagnosticsReport, path: Path | str) -> Path:
    target = Path(path)
    target.parent.mkdir(parents=True, exist_ok=True)
    target.write_text(render_table(report), encoding="utf-8")
    return target
