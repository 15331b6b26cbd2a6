"""
Logging configuration for cycinv.

Every module logs through get_logger(__name__). Console records go to
stderr, coloured when stderr is a terminal, so JSON and CSV written to
stdout stay machine-readable. With CYCINV_LOG_TO_FILE set, records are
also written to a daily file under CYCINV_LOG_PATH; theorem violations
found by sweeps get their own file.
"""

import logging
import sys
from datetime import datetime
from typing import Optional

from app.core.config import settings

CONSOLE_FORMAT = "%(asctime)s | %(levelname)s | %(name)s | %(message)s"
FILE_FORMAT = "%(asctime)s | %(levelname)-8s | %(name)s | %(funcName)s:%(lineno)d | %(message)s"
DATE_FORMAT = "%Y-%m-%d %H:%M:%S"

SWEEP_LOGGER = "cycinv.sweep"
SWEEP_LOG_FILE = "sweep.log"


class ColoredFormatter(logging.Formatter):
    """Formatter colouring the level name with ANSI codes."""

    COLORS = {
        "DEBUG": "\033[36m",
        "INFO": "\033[32m",
        "WARNING": "\033[33m",
        "ERROR": "\033[31m",
        "CRITICAL": "\033[35m",
    }
    RESET = "\033[0m"

    def format(self, record: logging.LogRecord) -> str:
        level = record.levelname
        record.levelname = f"{self.COLORS.get(level, '')}{level}{self.RESET}"
        try:
            return super().format(record)
        finally:
            record.levelname = level


def _console_handler() -> logging.Handler:
    handler = logging.StreamHandler(sys.stderr)
    handler.setLevel(logging.DEBUG if settings.debug else logging.INFO)
    formatter_cls = ColoredFormatter if sys.stderr.isatty() else logging.Formatter
    handler.setFormatter(formatter_cls(fmt=CONSOLE_FORMAT, datefmt=DATE_FORMAT))
    return handler


def _file_handler(file_name: str) -> logging.Handler:
    settings.log_path.mkdir(parents=True, exist_ok=True)
    handler = logging.FileHandler(settings.log_path / file_name, encoding="utf-8")
    handler.setLevel(logging.DEBUG)
    handler.setFormatter(logging.Formatter(fmt=FILE_FORMAT, datefmt=DATE_FORMAT))
    return handler


def setup_logger(name: str, log_file: Optional[str] = None) -> logging.Logger:
    """
    Configure a logger once; later calls return it unchanged.

    Args:
        name: Logger name
        log_file: File name under settings.log_path, default cycinv_YYYYMMDD.log

    Returns:
        Configured logger
    """
    logger = logging.getLogger(name)
    if logger.handlers:
        return logger

    logger.setLevel(getattr(logging, settings.log_level.upper(), logging.WARNING))
    logger.addHandler(_console_handler())
    if settings.log_to_file:
        logger.addHandler(_file_handler(log_file or f"cycinv_{datetime.now():%Y%m%d}.log"))
    logger.propagate = False
    return logger


def get_logger(name: str) -> logging.Logger:
    """Logger for a module; pass __name__."""
    return setup_logger(name)


def get_sweep_logger() -> logging.Logger:
    """Logger recording every sweep row that fails a theorem check, with its evidence."""
    return setup_logger(SWEEP_LOGGER, SWEEP_LOG_FILE)
