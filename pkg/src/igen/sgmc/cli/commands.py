"""Subcommand implementations; each returns the process exit status."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Mapping, Optional, Sequence

from igen.sgmc.check import run_checks
from igen.sgmc.diagnostics import (
    multivariate_ess,
    render_table,
    summarize,
    write_parameters_csv,
    write_report_csv,
    write_table,
)
from igen.sgmc.distributions import Rng
from igen.sgmc.domain import Chain, DiagnosticsReport, Observations, RunSpec, SamplerConfig, write_observations
from igen.sgmc.enum import ModelKind, Scheme
from igen.sgmc.error import EvaluationError, UsageError
from igen.sgmc.sampler import run_scheme
from igen.sgmc.service import get_logger
from igen.sgmc.zoo import DATA_SEED, ModelRegistry

from .options import DEFAULT_GRID, DEFAULT_OUT, model_kind, sampler_config, schemes

SUCCESS = 0
FAILURE = 1


def _load(kind: ModelKind, options: Mapping[str, Any]) -> Observations:
    registry = ModelRegistry()
    data = registry.load(kind, options.get("data"))
    source = options.get("data") or registry.default_source(kind)
    get_logger().info(f"{kind}: {data.size} observations ({source})")
    return data


def cmd_generate(options: Mapping[str, Any], params: Optional[Mapping[str, str]] = None) -> Path:
    """Write a dataset whose leading comment records the generator parameters and seed."""
    kind = model_kind(options)
    registry = ModelRegistry()
    seed = options.get("seed", DATA_SEED)
    values = registry.generator_params(kind, params)
    data = registry.generate(kind, seed, **values)

    target = options.get("data") or options.get("out", DEFAULT_OUT) / f"{kind}.txt"
    described = " ".join(f"{key}={value}" for key, value in values.items())
    path = write_observations(target, data, f"model={kind} seed={seed} {described}".strip())
    get_logger().info(f"wrote {data.size} observations to {path}")
    return path


@dataclass(frozen=True)
class TuneResult:
    step_size: float
    ess: float
    divergent: int
    acceptance: float

    @property
    def rank_key(self) -> tuple[bool, float]:
        return self.divergent > 0, -self.ess


def tune_step_size(
    kind: ModelKind, data: Observations, grid: Sequence[float], cfg: SamplerConfig
) -> tuple[float, list[TuneResult]]:
    """HMC on the marginalized program at every step in ``grid``; the largest ESS wins.

    Steps whose chains diverged rank after every non-divergent step.
    """
    if not grid:
        raise UsageError("step-size grid must not be empty")

    registry = ModelRegistry()
    results = []
    for step_size in grid:
        config = cfg.with_overrides(step_size=step_size)
        marginalized = registry.marginalized(kind, data)
        chain = run_scheme(Scheme.HMC_MARG, None, marginalized, config, Rng(cfg.seed, Scheme.HMC_MARG.stream_offset))
        ess = multivariate_ess(registry.canonicalize(kind, chain.kept())).value
        results.append(TuneResult(step_size, ess, chain.divergent_count, chain.acceptance_rate))
        get_logger().info(
            f"tune {kind}: step={step_size:g} ess={ess:.1f} divergent={chain.divergent_count} "
            f"accept={chain.acceptance_rate:.2f}"
        )

    best = min(results, key=lambda result: result.rank_key)
    return best.step_size, results


def cmd_tune(options: Mapping[str, Any]) -> float:
    kind = model_kind(options)
    data = _load(kind, options)
    step_size, results = tune_step_size(kind, data, options.get("grid", DEFAULT_GRID), sampler_config(options))
    for result in results:
        marker = "*" if result.step_size == step_size else " "
        print(f"{marker} step={result.step_size:<8g} ess={result.ess:>9.1f} divergent={result.divergent}")
    print(f"chosen step size: {step_size:g}")
    return step_size


def run_replica(kind_value: str, data: Observations, scheme_value: str, cfg: SamplerConfig, replica: int) -> Chain:
    """One independent chain on its own stream ``scheme.stream_offset + replica``; picklable for worker pools."""
    registry = ModelRegistry()
    scheme = Scheme.from_value(scheme_value)
    rng = Rng(cfg.seed, scheme.stream_offset + replica)
    stochastic = None if scheme.requires_marginalized else registry.stochastic(kind_value, data)
    marginalized = registry.marginalized(kind_value, data) if scheme.requires_marginalized else None
    return run_scheme(scheme, stochastic, marginalized, cfg, rng, replica)


def _run_all(spec: RunSpec, data: Observations) -> list[Chain]:
    tasks = [
        (str(spec.model), data, str(scheme), spec.config, replica)
        for scheme in spec.schemes
        for replica in range(spec.replicas)
    ]
    if spec.jobs == 1:
        return [run_replica(*task) for task in tasks]

    with ProcessPoolExecutor(max_workers=spec.jobs) as pool:
        futures = [pool.submit(run_replica, *task) for task in tasks]
        return [future.result() for future in futures]


def run_bench(spec: RunSpec, data: Observations) -> DiagnosticsReport:
    """Run every scheme and replica of ``spec``, then write chains, report CSV and text table."""
    logger = get_logger()
    logger.info(
        f"bench {spec.model}: schemes={','.join(str(s) for s in spec.schemes)} replicas={spec.replicas} "
        f"samples={spec.config.n_samples} step={spec.config.step_size:g} jobs={spec.jobs}"
    )
    chains = _run_all(spec, data)
    for chain in chains:
        chain.write_csv(spec.chain_path(Scheme.from_value(chain.scheme), chain.replica))

    report = summarize(chains, str(spec.model), lambda draws: ModelRegistry().canonicalize(spec.model, draws))
    write_report_csv(report, spec.report_path)
    write_parameters_csv(report, spec.parameters_path)
    write_table(report, spec.table_path)
    logger.info(f"wrote {spec.report_path}, {spec.parameters_path} and {spec.table_path}")
    return report


def cmd_bench(options: Mapping[str, Any]) -> DiagnosticsReport:
    kind = model_kind(options)
    data = _load(kind, options)
    cfg = sampler_config(options)
    if "step_size" not in options:
        step_size, _ = tune_step_size(kind, data, options.get("grid", DEFAULT_GRID), cfg)
        cfg = cfg.with_overrides(step_size=step_size)

    spec = RunSpec(
        model=kind,
        schemes=schemes(options) or RunSpec.default_schemes(kind),
        config=cfg,
        replicas=options.get("replicas", 10),
        data_path=options.get("data"),
        out_path=options.get("out", DEFAULT_OUT),
        jobs=options.get("jobs", 1),
    )
    report = run_bench(spec, data)
    print(render_table(report), end="")
    return report


def cmd_check(options: Mapping[str, Any]) -> int:
    kind = model_kind(options)
    data = _load(kind, options)
    biased = bool(options.get("biased", False))

    try:
        results = run_checks(kind, data, options.get("seed", 0), biased=biased)
    except EvaluationError as error:
        get_logger().error(f"check {kind} aborted: {error.message}")
        return FAILURE

    for result in results:
        print(result)
    return SUCCESS if all(result.passed for result in results) else FAILURE
