"""``key = value`` run configuration files."""

from __future__ import annotations

from pathlib import Path
from typing import Iterable

from igen.shared.string_utils import is_blank

from igen.sgmc.domain import read_lines
from igen.sgmc.error import UsageError

COMMENT = "#"


def parse_config(lines: Iterable[str]) -> dict[str, str]:
    """Keys use the long flag names, with ``-`` or ``_`` (``step-size = 0.05``)."""
    values: dict[str, str] = {}
    for number, line in enumerate(lines, start=1):
        text = line.split(COMMENT, 1)[0].strip()
        if is_blank(text):
            continue
        key, separator, value = text.partition("=")
        if not separator or is_blank(key) or is_blank(value):
            raise UsageError(f"invalid config line {number}: {line.strip()!r}")
        values[key.strip().replace("-", "_")] = value.strip()
    return values


def read_config(path: Path | str) -> dict[str, str]:
    return parse_config(read_lines(path))
