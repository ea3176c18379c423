"""Replica aggregation: ESS and wall time per scheme, posterior moments per parameter."""

from __future__ import annotations

from typing import Callable, Iterable, Mapping, Optional, Sequence

import numpy as np

from igen.sgmc.domain import Chain, DiagnosticsReport, ParameterSummary, SchemeSummary
from igen.sgmc.enum import Scheme
from igen.sgmc.error import UsageError

from .ess import effective_sample_size, multivariate_ess

Canonicalize = Callable[[np.ndarray], np.ndarray]

ESS_REDUCTION = "minimum over constrained coordinates"


def canonicalize_gmm(constrained: np.ndarray) -> np.ndarray:
    """Reorder each row's ``(mu_j, sigma_j)`` pairs by increasing ``mu``, removing label switching."""
    draws = np.asarray(constrained, dtype=np.float64)
    pairs = draws.reshape(draws.shape[0], -1, 2)
    order = np.argsort(pairs[:, :, 0], axis=1, kind="stable")
    return np.take_along_axis(pairs, order[:, :, None], axis=1).reshape(draws.shape)


def mean_and_sd(values: Iterable[float]) -> tuple[float, float]:
    """Mean and sample standard deviation (``ddof=1``) across replicas."""
    array = np.asarray(list(values), dtype=np.float64)
    return float(array.mean()), float(array.std(ddof=1)) if array.size > 1 else 0.0


def posterior_summary(
    draws: np.ndarray | Sequence[np.ndarray], names: Sequence[str]
) -> tuple[ParameterSummary, ...]:
    """Mean, sd and Monte Carlo standard error ``sd / sqrt(ESS)`` per column.

    A sequence of draw matrices is treated as independent replicas: moments are
    pooled and ESS adds up across them.
    """
    replicas = [np.asarray(draws)] if isinstance(draws, np.ndarray) else [np.asarray(part) for part in draws]
    pooled = np.concatenate(replicas, axis=0)
    if pooled.shape[1] != len(names):
        raise UsageError("one name per parameter column is required", context={"columns": pooled.shape[1]})

    summaries = []
    for column, name in enumerate(names):
        ess = sum(effective_sample_size(replica[:, column]).value for replica in replicas)
        sd = float(pooled[:, column].std(ddof=1))
        summaries.append(ParameterSummary(name, float(pooled[:, column].mean()), sd, sd / np.sqrt(ess), ess))
    return tuple(summaries)


def _scheme_order(name: str) -> int:
    scheme = Scheme.from_value(name)
    return Scheme.SCHEMES.index(scheme) if scheme is not None else len(Scheme.SCHEMES)


def _summarize_scheme(name: str, chains: Sequence[Chain], canonicalize: Canonicalize) -> tuple[SchemeSummary, list]:
    if len(chains) < 2:
        raise UsageError("summaries need at least two replicas per scheme", context={"scheme": name})
    lengths = {chain.size for chain in chains}
    if len(lengths) != 1:
        raise UsageError("replicas differ in length", context={"scheme": name, "lengths": sorted(lengths)})

    kept = [canonicalize(chain.kept()) for chain in chains]
    estimates = [multivariate_ess(draws) for draws in kept]
    ess_mean, ess_sd = mean_and_sd(estimate.value for estimate in estimates)
    wall_mean, wall_sd = mean_and_sd(chain.wall_time for chain in chains)
    scheme = Scheme.from_value(name)

    summary = SchemeSummary(
        scheme=name,
        label=scheme.label if scheme is not None else name,
        replicas=len(chains),
        ess_mean=ess_mean,
        ess_sd=ess_sd,
        wall_time_mean=wall_mean,
        wall_time_sd=wall_sd,
        ess_per_second=ess_mean / wall_mean if wall_mean > 0 else float("nan"),
        gradient_evaluations_mean=float(np.mean([chain.gradient_evaluations for chain in chains])),
        likelihood_terms_mean=float(np.mean([chain.likelihood_terms for chain in chains])),
        divergent_mean=float(np.mean([chain.divergent_count for chain in chains])),
        acceptance_mean=float(np.mean([chain.acceptance_rate for chain in chains])),
        degenerate=any(estimate.degenerate for estimate in estimates),
    )
    return summary, kept


def summarize(
    chains: Sequence[Chain], model: str = "", canonicalize: Optional[Canonicalize] = None
) -> DiagnosticsReport:
    """Group replicas by scheme (in report column order) and aggregate them."""
    if not chains:
        raise UsageError("no chains to summarize")
    canonicalize = canonicalize or (lambda draws: draws)

    grouped: dict[str, list[Chain]] = {}
    for chain in chains:
        grouped.setdefault(chain.scheme, []).append(chain)

    schemes = []
    parameters = {}
    for name in sorted(grouped, key=_scheme_order):
        members = sorted(grouped[name], key=lambda chain: chain.replica)
        summary, kept = _summarize_scheme(name, members, canonicalize)
        schemes.append(summary)
        parameters[name] = posterior_summary(kept, members[0].parameter_names)

    first = chains[0].config
    metadata = {
        "ess": ESS_REDUCTION,
        "burn_in": f"{first.burn_in_fraction:g}",
        "samples": str(first.n_samples),
        "steps_per_sample": str(first.steps_per_sample),
        "step_size": f"{first.step_size:g}",
        "friction": f"{first.friction:g}",
    }
    return DiagnosticsReport(model or chains[0].metadata.get("model", ""), tuple(schemes), parameters, metadata)


def compare_posterior_means(
    report: DiagnosticsReport, first: str, second: str, tolerance: float = 3.0
) -> Mapping[str, bool]:
    """Per parameter, whether the two schemes' means agree within ``tolerance`` combined MCSEs."""
    result = {}
    for summary in report.parameters[first]:
        other = report.parameter(second, summary.name)
        if other is None:
            raise UsageError(f"scheme {second} has no parameter {summary.name}")
        combined = np.hypot(summary.mcse, other.mcse)
        result[summary.name] = bool(abs(summary.mean - other.mean) <= tolerance * combined)
    return result
