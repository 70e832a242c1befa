"""
Exception hierarchy shared by every toolkit module.

The CLI maps any PreventKitError to exit status 1.
"""
from typing import Optional


class PreventKitError(Exception):
    """Base class for all toolkit errors."""


class InvalidArgumentError(PreventKitError, ValueError):
    """A caller passed an argument outside the operation's domain."""


class CorpusPathError(PreventKitError):
    """Corpus directory or input file is missing."""

    def __init__(self, path: str, message: str = "path does not exist"):
        self.path = path
        super().__init__(f"{path}: {message}")


class CorpusDecodeError(PreventKitError):
    """A corpus document or input file is not valid UTF-8."""

    def __init__(self, source: str, byte_offset: int, reason: str = ""):
        self.source = source
        self.byte_offset = byte_offset
        detail = f" ({reason})" if reason else ""
        super().__init__(f"{source}: undecodable byte at offset {byte_offset}{detail}")


class CodingValidationError(PreventKitError):
    """A coding or pattern file violates its schema."""

    def __init__(self, message: str, row: Optional[int] = None, column: Optional[str] = None):
        self.row = row
        self.column = column
        location = ""
        if row is not None:
            location += f"row {row}"
        if column is not None:
            location += f"{', ' if location else ''}column '{column}'"
        super().__init__(f"{location}: {message}" if location else message)


class CodingDataError(PreventKitError):
    """Coding data is well-formed but inconsistent (e.g. coders disagree on form)."""


class UnsupportedRosterError(PreventKitError):
    """Pairwise agreement statistics need exactly two coders."""


class DegenerateMarginalsError(PreventKitError):
    """Every assignment falls in one category, so P(E) = 1 and K is undefined."""


class UndefinedStatisticError(PreventKitError):
    """A contingency table has an empty row or column."""


class CriticalValueError(PreventKitError):
    """A tabled chi-square critical value disagrees with its tail probability."""


class TreeParseError(PreventKitError):
    """A serialized decision tree is malformed."""

    def __init__(self, message: str, node_path: str = ""):
        self.node_path = node_path
        super().__init__(f"{node_path}: {message}" if node_path else message)


__all__ = [
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
