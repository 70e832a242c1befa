"""
Coding-file I/O.

Format: CSV with header ``example_id,coder,form,intentionality,awareness``;
lines starting with ``#`` are comments. Row numbers in errors count data
rows from 1, excluding the header and comments.
"""
from collections import defaultdict
from pathlib import Path
from typing import Dict, List, Sequence, Set, Union

import pandas as pd

from src.annotation.models import AgreedExample, CodingRecord, CodingSet
from src.annotation.validators import (
    CODING_COLUMNS,
    validate_coding_row,
    validate_header,
    validate_roster,
)
from src.utils.errors import CodingValidationError, CorpusPathError, InvalidArgumentError
from src.utils.logger import get_logger
from src.utils.tables import read_table

logger = get_logger(__name__)


def load_codings(path: Union[str, Path]) -> CodingSet:
    """
    Load and validate a coding file.

    Args:
        path: Coding CSV path

    Returns:
        CodingSet (records sorted by example id, then coder)

    Raises:
        CorpusPathError: file missing
        CodingValidationError: bad header, unknown enum token, duplicate
            (example_id, coder) pair, or inconsistent coder roster
    """
    path = Path(path)
    if not path.is_file():
        raise CorpusPathError(str(path), "coding file not found")

    frame = read_table(path, comments=True, skipinitialspace=True)
    ok, column, message = validate_header(frame.columns)
    if not ok:
        raise CodingValidationError(message)

    records: List[CodingRecord] = []
    seen: Set[tuple] = set()
    rosters: Dict[str, Set[str]] = defaultdict(set)
    for row_number, row in enumerate(frame.to_dict(orient="records"), start=1):
        row = {k: str(v).strip() for k, v in row.items()}
        ok, column, message = validate_coding_row(row)
        if not ok:
            raise CodingValidationError(message, row=row_number, column=column)

        key = (row["example_id"], row["coder"])
        if key in seen:
            raise CodingValidationError(
                f"duplicate coding for example '{key[0]}' by coder '{key[1]}'",
                row=row_number,
                column="coder",
            )
        seen.add(key)
        rosters[row["example_id"]].add(row["coder"])
        records.append(CodingRecord(**row))

    ok, column, message = validate_roster({eid: frozenset(c) for eid, c in rosters.items()})
    if not ok:
        raise CodingValidationError(message, column=column)

    coding_set = CodingSet(records=tuple(records))
    logger.info(
        f"Loaded {len(coding_set)} codings from {path}: "
        f"{len(coding_set.example_ids)} examples, roster {list(coding_set.roster)}"
    )
    return coding_set


def codings_to_frame(records: Sequence[CodingRecord]) -> pd.DataFrame:
    return pd.DataFrame(
        [
            {
                "example_id": r.example_id,
                "coder": r.coder,
                "form": r.form.value,
                "intentionality": r.intentionality.value,
                "awareness": r.awareness.value,
            }
            for r in records
        ],
        columns=CODING_COLUMNS,
    )


def save_codings(coding_set: CodingSet, path: Union[str, Path]) -> None:
    """Write a coding set in the coding-file format."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    codings_to_frame(coding_set.records).to_csv(path, index=False, lineterminator="\n")
    logger.info(f"Wrote {len(coding_set)} codings to {path}")


def agreed_subset_to_codings(
    subset: Sequence[AgreedExample],
    coders: Sequence[str]
) -> CodingSet:
    """Expand agreed examples into a unanimous coding set for the given roster."""
    if not coders:
        raise InvalidArgumentError("at least one coder name is required")
    records = [
        CodingRecord(
            example_id=example.example_id,
            coder=coder,
            form=example.form,
            intentionality=example.intentionality,
            awareness=example.awareness,
        )
        for example in subset
        for coder in coders
    ]
    return CodingSet(records=tuple(records))


def save_agreed_subset(
    subset: Sequence[AgreedExample],
    path: Union[str, Path],
    coders: Sequence[str]
) -> None:
    """Write the agreed subset as a unanimous coding file (readable by load_codings)."""
    save_codings(agreed_subset_to_codings(subset, coders), path)


__all__ = [
    "load_codings",
    "codings_to_frame",
    "save_codings",
    "agreed_subset_to_codings",
    "save_agreed_subset",
]
