from __future__ import annotations

import logging
from logging import FileHandler, Formatter, Logger, StreamHandler
from pathlib import Path
from threading import RLock

LIBRARY_LOGGER = "igen.sgmc"


class LoggerService:
    """Thread-safe singleton loggers configured with stream and file handlers."""

    _instances: dict[str, "LoggerService"] = {}
    _lock = RLock()

    def __new__(
        cls,
        name: str = LIBRARY_LOGGER,
        level: int = logging.INFO,
        log_file: str | None = None,
        root_path: Path | str | None = None,
    ):
        with cls._lock:
            if name not in cls._instances:
                instance = super().__new__(cls)
                instance._initialize(name, level, log_file, root_path)
                cls._instances[name] = instance

            return cls._instances[name]

    def _initialize(self, name: str, level: int, log_file: str | None, root_path: Path | str | None = None):
        self.logger: Logger = logging.getLogger(name)
        self.logger.setLevel(level)
        self.formatter = Formatter(
            "[%(asctime)s] [%(levelname)s] %(name)s: %(message)s", datefmt="%Y-%m-%d %H:%M:%S"
        )

        stream_handler = StreamHandler()
        stream_handler.setFormatter(self.formatter)
        self.logger.addHandler(stream_handler)

        if root_path and log_file:
            self.attach_file(log_file, root_path)

    def attach_file(self, log_file: str, root_path: Path | str) -> Path:
        """Append records to ``<root_path>/logs/<log_file>`` and return that path."""
        logs_dir = Path(root_path) / "logs"
        logs_dir.mkdir(parents=True, exist_ok=True)
        log_path = logs_dir / log_file

        file_handler = FileHandler(filename=log_path, mode="a")
        file_handler.setFormatter(self.formatter)
        self.logger.addHandler(file_handler)
        return log_path

    def set_level(self, level: int) -> None:
        with self._lock:
            self.logger.setLevel(level)

    def get_logger(self) -> Logger:
        return self.logger


def get_logger() -> Logger:
    """Shortcut for the library-wide logger."""
    return LoggerService(LIBRARY_LOGGER).get_logger()
