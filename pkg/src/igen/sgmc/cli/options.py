from __future__ import annotations

import argparse
from pathlib import Path
from typing import Any, Callable, Mapping, Optional

from igen.sgmc.domain import SamplerConfig
from igen.sgmc.enum import ModelKind, NuisanceKernel, Scheme
from igen.sgmc.error import UsageError

DEFAULT_GRID = (0.001, 0.003, 0.01, 0.03, 0.1, 0.3)
DEFAULT_OUT = Path("out")


def _float_list(raw: str) -> tuple[float, ...]:
    return tuple(float(item) for item in raw.split(",") if item.strip())


def _str_list(raw: str) -> tuple[str, ...]:
    return tuple(item.strip() for item in raw.split(",") if item.strip())


def _flag(raw: str) -> bool:
    return raw.strip().lower() in {"1", "true", "yes", "on"}


CONVERTERS: Mapping[str, Callable[[str], Any]] = {
    "model": str,
    "scheme": _str_list,
    "seed": int,
    "replicas": int,
    "samples": int,
    "steps": int,
    "step_size": float,
    "friction": float,
    "grad_samples": int,
    "kernel": str,
    "sweeps": int,
    "jobs": int,
    "data": Path,
    "out": Path,
    "grid": _float_list,
    "biased": _flag,
}


def resolve(args: argparse.Namespace, file_values: Mapping[str, str]) -> dict[str, Any]:
    """Merge flags over config-file values; keys absent from both are left out."""
    unknown = sorted(set(file_values) - set(CONVERTERS))
    if unknown:
        raise UsageError(f"unknown config keys: {', '.join(unknown)}")

    merged: dict[str, Any] = {}
    for key, convert in CONVERTERS.items():
        flag = getattr(args, key, None)
        if flag is not None and flag is not False:
            merged[key] = flag
        elif key in file_values:
            try:
                merged[key] = convert(file_values[key])
            except ValueError as error:
                raise UsageError(f"invalid value for {key}: {file_values[key]!r}", from_exception=error) from error
    return merged


def model_kind(options: Mapping[str, Any]) -> ModelKind:
    if "model" not in options:
        raise UsageError("--model is required")
    kind = ModelKind.from_value(options["model"])
    if kind is None:
        names = ", ".join(str(known) for known in ModelKind.KINDS)
        raise UsageError(f"unknown model: {options['model']!r} (expected one of {names})")
    return kind


def schemes(options: Mapping[str, Any]) -> Optional[tuple[Scheme, ...]]:
    if "scheme" not in options:
        return None
    resolved = []
    for name in options["scheme"]:
        scheme = Scheme.from_value(name)
        if scheme is None:
            raise UsageError(f"unknown scheme: {name!r}")
        resolved.append(scheme)
    return tuple(resolved)


def sampler_config(options: Mapping[str, Any]) -> SamplerConfig:
    kernel = options.get("kernel")
    try:
        nuisance_kernel = NuisanceKernel(kernel) if kernel is not None else None
    except ValueError as error:
        raise UsageError(f"unknown kernel: {kernel!r}", from_exception=error) from error

    return SamplerConfig().with_overrides(
        n_samples=options.get("samples"),
        steps_per_sample=options.get("steps"),
        step_size=options.get("step_size"),
        friction=options.get("friction"),
        grad_samples=options.get("grad_samples"),
        seed=options.get("seed"),
        kernel=nuisance_kernel,
        sweeps=options.get("sweeps"),
    )
