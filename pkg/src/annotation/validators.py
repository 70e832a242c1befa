"""
Validation utilities for coding-file rows and coder rosters.

Validators return ``(is_valid, column, error_message)``; loaders turn a
failure into a CodingValidationError.
"""
from typing import Dict, FrozenSet, Iterable, Mapping, Optional, Tuple

from src.annotation.schema import FEATURES
from src.utils.logger import get_logger

logger = get_logger(__name__)

CODING_COLUMNS = ["example_id", "coder", "form", "intentionality", "awareness"]

ValidationResult = Tuple[bool, Optional[str], Optional[str]]


def validate_header(columns: Iterable[str]) -> ValidationResult:
    """
    Validate the coding-file header.

    Example:
        >>> validate_header(["example_id", "coder", "form", "intentionality", "awareness"])
        (True, None, None)
    """
    columns = list(columns)
    if columns != CODING_COLUMNS:
        return False, None, f"expected header {','.join(CODING_COLUMNS)}, got {','.join(columns)}"
    return True, None, None


def validate_coding_row(row: Mapping[str, str]) -> ValidationResult:
    """
    Validate one coding row.

    Required fields:
    - example_id: nonempty
    - coder: nonempty
    - form: DONT | NEG_TC
    - intentionality: CON | UNC
    - awareness: AW | UNAW
    """
    for column in ("example_id", "coder"):
        if not str(row.get(column, "")).strip():
            return False, column, f"'{column}' must be a non-empty string"

    for feature, enum in FEATURES.items():
        token = row.get(feature, "")
        if token not in enum.__members__:
            allowed = "|".join(enum.__members__)
            return False, feature, f"unknown {feature} token '{token}' (expected {allowed})"

    return True, None, None


def validate_roster(rosters: Mapping[str, FrozenSet[str]]) -> ValidationResult:
    """
    Check that every example is coded by the same coder roster.

    Args:
        rosters: example_id -> coders who coded it
    """
    if not rosters:
        return False, None, "coding file contains no records"

    distinct = set(rosters.values())
    if len(distinct) > 1:
        expected = max(distinct, key=lambda r: (len(r), sorted(r)))
        for example_id in sorted(rosters):
            if rosters[example_id] != expected:
                return (
                    False,
                    "coder",
                    f"example '{example_id}' coded by {sorted(rosters[example_id])}, "
                    f"expected roster {sorted(expected)}",
                )

    roster = next(iter(distinct))
    logger.debug(f"Roster validation passed: {len(roster)} coders, {len(rosters)} examples")
    return True, None, None


__all__ = [
    "CODING_COLUMNS",
    "validate_header",
    "validate_coding_row",
    "validate_roster",
]
