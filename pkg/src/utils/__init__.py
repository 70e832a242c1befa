"""
Utility modules for configuration, logging, and errors.
"""
from src.utils.config import get_settings, reload_settings, Settings
from src.utils.logger import get_logger, setup_logger, set_level, LoggerMixin
from src.utils.errors import (
    PreventKitError,
    InvalidArgumentError,
    CorpusPathError,
    CorpusDecodeError,
    CodingValidationError,
    CodingDataError,
    UnsupportedRosterError,
    DegenerateMarginalsError,
    UndefinedStatisticError,
    CriticalValueError,
    TreeParseError,
)

__all__ = [
    "get_settings",
    "reload_settings",
    "Settings",
    "get_logger",
    "setup_logger",
    "set_level",
    "LoggerMixin",
    "PreventKitError",
    "InvalidArgumentError",
    "CorpusPathError",
    "CorpusDecodeError",
    "CodingValidationError",
    "CodingDataError",
    "UnsupportedRosterError",
    "DegenerateMarginalsError",
    "UndefinedStatisticError",
    "CriticalValueError",
    "TreeParseError",
]
