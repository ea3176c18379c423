from .commands import TuneResult, cmd_bench, cmd_check, cmd_generate, cmd_tune, run_bench, run_replica, tune_step_size
from .config_file import parse_config, read_config
from .main import build_parser, main

__all__ = [
    "TuneResult",
    "build_parser",
    "cmd_bench",
    "cmd_check",
    "cmd_generate",
    "cmd_tune",
    "main",
    "parse_config",
    "read_config",
    "run_bench",
    "run_replica",
    "tune_step_size",
]
