from .logger_service import LIBRARY_LOGGER, LoggerService, get_logger

__all__ = ["LIBRARY_LOGGER", "LoggerService", "get_logger"]
