from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path
from typing import Optional, Sequence

from igen.sgmc.error import SgmcError, UsageError
from igen.sgmc.service import LIBRARY_LOGGER, LoggerService

from .commands import FAILURE, SUCCESS, cmd_bench, cmd_check, cmd_generate, cmd_tune
from .config_file import read_config
from .options import CONVERTERS, resolve

USAGE = 2


def _common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--model", help="survey, gmm, hmm or twonormals")
    parser.add_argument("--scheme", type=CONVERTERS["scheme"], help="comma-separated: sghmc1,sghmc10,mh-hmc,hmc-marg")
    parser.add_argument("--seed", type=int)
    parser.add_argument("--replicas", type=int)
    parser.add_argument("--samples", type=int, help="draws recorded per chain")
    parser.add_argument("--steps", type=int, help="leapfrog or sgHMC updates per draw")
    parser.add_argument("--step-size", dest="step_size", type=float)
    parser.add_argument("--friction", type=float)
    parser.add_argument("--grad-samples", dest="grad_samples", type=int)
    parser.add_argument("--kernel", help="nuisance kernel of the sgHMC estimator: gibbs or mh")
    parser.add_argument("--sweeps", type=int)
    parser.add_argument("--jobs", type=int)
    parser.add_argument("--data", type=Path, help="dataset file; the shipped dataset when omitted")
    parser.add_argument("--out", type=Path)
    parser.add_argument("--config", type=Path, help="key = value file; flags take precedence")
    parser.add_argument("--verbose", action="store_true")
    parser.add_argument("--log-file", dest="log_file")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sgmc-bench", description="Stochastic-gradient HMC on stochastically differentiable programs."
    )
    commands = parser.add_subparsers(dest="command", required=True)

    generate = commands.add_parser("generate", help="simulate a dataset")
    _common(generate)
    generate.add_argument(
        "--param", action="append", default=[], metavar="KEY=VALUE", help="generator parameter override"
    )

    tune = commands.add_parser("tune", help="pick the step size maximizing HMC ESS on the marginalized model")
    _common(tune)
    tune.add_argument("--grid", type=CONVERTERS["grid"], help="comma-separated step sizes")

    bench = commands.add_parser("bench", help="run every scheme and replica and write the report")
    _common(bench)
    bench.add_argument("--grid", type=CONVERTERS["grid"])

    check = commands.add_parser("check", help="gradient, enumeration and unbiasedness suites")
    _common(check)
    check.add_argument("--biased", action="store_true", help="check the naive estimator (expected to fail)")
    return parser


def _params(raw: Sequence[str]) -> dict[str, str]:
    params = {}
    for item in raw:
        key, separator, value = item.partition("=")
        if not separator:
            raise UsageError(f"--param expects KEY=VALUE, got {item!r}")
        params[key.strip()] = value.strip()
    return params


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    service = LoggerService(LIBRARY_LOGGER)
    service.set_level(logging.DEBUG if args.verbose else logging.INFO)
    if args.log_file:
        service.attach_file(args.log_file, Path.cwd())
    logger = service.get_logger()

    try:
        options = resolve(args, read_config(args.config) if args.config else {})
        if args.command == "generate":
            cmd_generate(options, _params(args.param))
        elif args.command == "tune":
            cmd_tune(options)
        elif args.command == "bench":
            cmd_bench(options)
        else:
            return cmd_check(options)
    except UsageError as error:
        logger.error(str(error))
        return USAGE
    except SgmcError as error:
        logger.error(str(error))
        return error.exit_code or FAILURE
    return SUCCESS


if __name__ == "__main__":
    sys.exit(main())
