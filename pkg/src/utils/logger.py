"""
Logging setup shared by every toolkit module.

Diagnostics go to stderr; stdout is reserved for reports so that two runs
on the same inputs produce byte-identical output.
"""
import logging
import sys
from pathlib import Path
from typing import Optional

CONSOLE_FORMAT = '%(levelname)s - %(name)s - %(message)s'
FILE_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(funcName)s:%(lineno)d - %(message)s'


class ColoredFormatter(logging.Formatter):
    """Level names colored by severity, only when stderr is a terminal."""

    COLORS = {
        'DEBUG': '\033[36m',    # Cyan
        'INFO': '\033[32m',     # Green
        'WARNING': '\033[33m',  # Yellow
        'ERROR': '\033[31m',    # Red
        'CRITICAL': '\033[35m', # Magenta
    }
    RESET = '\033[0m'

    def format(self, record: logging.LogRecord) -> str:
        color = self.COLORS.get(record.levelname)
        if color and sys.stderr.isatty():
            # Copy so file handlers still see the plain level name
            record = logging.makeLogRecord(record.__dict__)
            record.levelname = f"{color}{record.levelname}{self.RESET}"
        return super().format(record)


def _console_handler(level: int) -> logging.Handler:
    handler = logging.StreamHandler(sys.stderr)
    handler.setLevel(level)
    handler.setFormatter(ColoredFormatter(fmt=CONSOLE_FORMAT))
    return handler


def _file_handler(log_file: str) -> logging.Handler:
    Path(log_file).parent.mkdir(parents=True, exist_ok=True)
    handler = logging.FileHandler(log_file, encoding='utf-8')
    handler.setLevel(logging.DEBUG)
    handler.setFormatter(logging.Formatter(fmt=FILE_FORMAT, datefmt='%Y-%m-%d %H:%M:%S'))
    return handler


def setup_logger(
    name: str,
    level: str = "WARNING",
    log_file: Optional[str] = None,
    enable_console: bool = True
) -> logging.Logger:
    """
    Configure a named logger once; later calls return it unchanged.

    Args:
        name: Logger name (usually __name__ of the module)
        level: Logging level (DEBUG, INFO, WARNING, ERROR, CRITICAL)
        log_file: Optional file receiving every record the logger lets through
        enable_console: Attach the stderr handler

    Returns:
        Configured logger instance
    """
    logger = logging.getLogger(name)
    numeric = getattr(logging, level.upper())
    logger.setLevel(numeric)

    if logger.handlers:
        return logger

    if enable_console:
        logger.addHandler(_console_handler(numeric))
    if log_file:
        logger.addHandler(_file_handler(log_file))

    logger.propagate = False
    return logger


def get_logger(name: str) -> logging.Logger:
    """
    Get a logger configured from PREVENTKIT_LOG_LEVEL and PREVENTKIT_LOG_FILE.

    Args:
        name: Logger name (usually __name__ of the module)
    """
    # Deferred so this module imports without settings
    try:
        from src.utils.config import get_settings
        settings = get_settings()
        return setup_logger(name, level=settings.log_level, log_file=settings.log_file)
    except Exception as e:
        logger = logging.getLogger(name)
        logger.setLevel(logging.WARNING)
        if not logger.handlers:
            logger.addHandler(_console_handler(logging.WARNING))
        logger.warning(f"Settings unavailable, using default logging: {e}")
        return logger


def set_level(level: str) -> None:
    """Apply a new level to every toolkit logger already created (CLI --log-level)."""
    numeric = getattr(logging, level.upper())
    for name, logger in logging.root.manager.loggerDict.items():
        if not name.startswith("src") or not isinstance(logger, logging.Logger):
            continue
        logger.setLevel(numeric)
        for handler in logger.handlers:
            if not isinstance(handler, logging.FileHandler):
                handler.setLevel(numeric)


class LoggerMixin:
    """Gives a class a ``logger`` property named ``src.<ClassName>``."""

    @property
    def logger(self) -> logging.Logger:
        if not hasattr(self, '_logger'):
            self._logger = get_logger(f"src.{self.__class__.__name__}")
        return self._logger
