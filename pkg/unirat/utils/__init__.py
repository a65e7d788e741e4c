"""
Centralized logging configuration for unirat.

Every module asks for its logger through :func:`get_logger`; handlers are only
installed by :func:`setup_logging`, which the CLI calls on demand so that
reports written to stdout are never interleaved with log lines.
"""

import logging
import sys
from logging.handlers import RotatingFileHandler
from pathlib import Path
from typing import Any, Dict, Optional

from .errors import UniratError


class ColoredFormatter(logging.Formatter):
    """Formatter with ANSI colors for console output."""

    COLORS = {
        "DEBUG": "\033[36m",
        "INFO": "\033[32m",
        "WARNING": "\033[33m",
        "ERROR": "\033[31m",
        "CRITICAL": "\033[35m",
        "RESET": "\033[0m",
    }

    def format(self, record):
        color = self.COLORS.get(record.levelname, self.COLORS["RESET"])
        record = logging.makeLogRecord(record.__dict__)
        record.levelname = f"{color}{record.levelname}{self.COLORS['RESET']}"
        return super().format(record)


def setup_logging(
    name: str = "unirat",
    level: str = "INFO",
    log_file: Optional[str] = None,
    log_to_console: bool = True,
    max_bytes: int = 10 * 1024 * 1024,
    backup_count: int = 5,
) -> logging.Logger:
    """
    Set up logging for the application.

    Args:
        name: Logger name
        level: Logging level (DEBUG, INFO, WARNING, ERROR, CRITICAL)
        log_file: Optional path of a rotating log file
        log_to_console: Whether to log to stderr
        max_bytes: Maximum size of log file before rotation
        backup_count: Number of backup files to keep

    Returns:
        Configured logger instance
    """
    logger = logging.getLogger(name)
    logger.setLevel(getattr(logging, level.upper(), logging.INFO))

    # Prevent duplicate handlers on repeated CLI invocations
    if logger.handlers:
        return logger

    if log_file:
        Path(log_file).parent.mkdir(parents=True, exist_ok=True)
        file_handler = RotatingFileHandler(log_file, maxBytes=max_bytes, backupCount=backup_count)
        file_handler.setFormatter(
            logging.Formatter(
                "%(asctime)s - %(name)s - %(levelname)s - %(filename)s:%(lineno)d - %(message)s"
            )
        )
        logger.addHandler(file_handler)

    if log_to_console:
        console_handler = logging.StreamHandler(sys.stderr)
        console_handler.setFormatter(
            ColoredFormatter(
                "%(asctime)s - %(name)s - %(levelname)s - %(message)s", datefmt="%H:%M:%S"
            )
        )
        logger.addHandler(console_handler)

    return logger


def get_logger(name: str, level: Optional[str] = None) -> logging.Logger:
    """
    Get a logger instance without installing handlers.

    Args:
        name: Logger name (typically __name__)
        level: Override log level for this logger

    Returns:
        Logger instance
    """
    logger = logging.getLogger(name)
    if level:
        logger.setLevel(getattr(logging, level.upper(), logging.INFO))
    return logger


def log_performance(operation: str, duration: float, details: Optional[Dict[str, Any]] = None):
    """
    Log wall-clock time for an operation.

    Args:
        operation: Name of the operation
        duration: Duration in seconds
        details: Additional details about the operation
    """
    logger = get_logger("unirat.performance")
    details = details or {}

    message = f"Operation '{operation}' completed in {duration:.2f}s"
    if details:
        detail_str = ", ".join(f"{k}={v}" for k, v in details.items())
        message += f" ({detail_str})"

    logger.info(message)


def log_error_with_context(error: Exception, context: Optional[Dict[str, Any]] = None):
    """
    Log errors with additional context information.

    Args:
        error: The exception that occurred
        context: Additional context about when/where the error occurred
    """
    logger = get_logger("unirat.errors")
    context = context or {}

    message = f"Error: {type(error).__name__}: {error}"
    if context:
        context_str = ", ".join(f"{k}={v}" for k, v in context.items())
        message += f" (Context: {context_str})"

    logger.error(message, exc_info=not isinstance(error, UniratError))


__all__ = [
    "ColoredFormatter",
    "UniratError",
    "setup_logging",
    "get_logger",
    "log_performance",
    "log_error_with_context",
]
