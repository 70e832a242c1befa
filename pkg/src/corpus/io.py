"""
CSV artifacts of the extraction stages.

Matches / sample files: ``id,source,start,end,patterns,text`` with ``;``-joined
pattern ids. Filter files: ``id,keep,reason,overridden,form``.
"""
from pathlib import Path
from typing import List, Optional, Sequence, Set, Tuple, Union

import pandas as pd
from pydantic import ValidationError

from src.annotation.schema import FormClass
from src.corpus.models import FilterVerdict, Utterance
from src.utils.errors import CodingValidationError, CorpusPathError
from src.utils.logger import get_logger
from src.utils.tables import read_table

logger = get_logger(__name__)

MATCH_COLUMNS = ["id", "source", "start", "end", "patterns", "text"]
VERDICT_COLUMNS = ["id", "keep", "reason", "overridden", "form"]
REQUIRED_MATCH_FIELDS = ("id", "start", "end", "patterns", "text")


def _write(frame: pd.DataFrame, path: Union[str, Path]) -> None:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    frame.to_csv(path, index=False, lineterminator="\n")


def utterances_to_frame(utterances: Sequence[Utterance]) -> pd.DataFrame:
    return pd.DataFrame(
        [
            {
                "id": u.id,
                "source": u.source,
                "start": u.start,
                "end": u.end,
                "patterns": ";".join(u.matched),
                "text": u.text,
            }
            for u in utterances
        ],
        columns=MATCH_COLUMNS,
    )


def write_utterances(utterances: Sequence[Utterance], path: Union[str, Path]) -> None:
    """Write a matches/sample CSV."""
    _write(utterances_to_frame(utterances), path)
    logger.info(f"Wrote {len(utterances)} utterances to {path}")


def _segment_index(utterance_id: str, fallback: int) -> int:
    _, _, suffix = utterance_id.rpartition(":")
    return int(suffix) if suffix.isdigit() else fallback


def read_utterances(path: Union[str, Path]) -> List[Utterance]:
    """
    Read a matches/sample CSV.

    Raises:
        CorpusPathError: file missing
        CodingValidationError: bad header or field
    """
    path = Path(path)
    if not path.is_file():
        raise CorpusPathError(str(path), "matches file not found")

    frame = read_table(path)
    if list(frame.columns) != MATCH_COLUMNS:
        raise CodingValidationError(
            f"expected header {','.join(MATCH_COLUMNS)}, got {','.join(frame.columns)}"
        )

    utterances = []
    for row_number, row in enumerate(frame.itertuples(index=False), start=1):
        for column in REQUIRED_MATCH_FIELDS:
            value = getattr(row, column)
            if not isinstance(value, str) or not value.strip():
                raise CodingValidationError(f"'{column}' must not be empty", row=row_number, column=column)
        try:
            utterances.append(Utterance(
                id=row.id,
                text=row.text,
                source=row.source,
                index=_segment_index(row.id, row_number - 1),
                start=int(row.start),
                end=int(row.end),
                matched=tuple(p for p in row.patterns.split(";") if p),
            ))
        except (ValueError, ValidationError) as e:
            raise CodingValidationError(str(e).splitlines()[0], row=row_number) from e
    return utterances


def verdicts_to_frame(
    results: Sequence[Tuple[Utterance, FilterVerdict, Optional[FormClass]]]
) -> pd.DataFrame:
    return pd.DataFrame(
        [
            {
                "id": verdict.utterance_id,
                "keep": "true" if verdict.keep else "false",
                "reason": verdict.reject_reason.value if verdict.reject_reason else "",
                "overridden": "true" if verdict.overridden else "false",
                "form": form.value if form else "",
            }
            for _, verdict, form in results
        ],
        columns=VERDICT_COLUMNS,
    )


def write_verdicts(
    results: Sequence[Tuple[Utterance, FilterVerdict, Optional[FormClass]]],
    path: Union[str, Path]
) -> None:
    """Write filter results (one row per probe hit)."""
    _write(verdicts_to_frame(results), path)
    logger.info(f"Wrote {len(results)} verdicts to {path}")


def read_kept_ids(path: Union[str, Path]) -> Set[str]:
    """
    Ids of the utterances a filter file marks as kept.

    Raises:
        CorpusPathError: file missing
        CodingValidationError: bad header
    """
    path = Path(path)
    if not path.is_file():
        raise CorpusPathError(str(path), "verdicts file not found")

    frame = read_table(path)
    if list(frame.columns) != VERDICT_COLUMNS:
        raise CodingValidationError(
            f"expected header {','.join(VERDICT_COLUMNS)}, got {','.join(frame.columns)}"
        )
    return set(frame.loc[frame["keep"].str.lower() == "true", "id"])


__all__ = [
    "MATCH_COLUMNS",
    "VERDICT_COLUMNS",
    "utterances_to_frame",
    "write_utterances",
    "read_utterances",
    "verdicts_to_frame",
    "write_verdicts",
    "read_kept_ids",
]
