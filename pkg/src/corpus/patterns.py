"""
Probe pattern table and the occurrence finder shared by probing, filtering
and form classification.
"""
import re
from functools import lru_cache
from pathlib import Path
from typing import Iterable, List, NamedTuple, Optional, Sequence, Tuple, Union

from pydantic import ValidationError

from src.annotation.schema import FormClass
from src.corpus.models import ProbePattern, Utterance
from src.utils.errors import CodingValidationError, CorpusPathError
from src.utils.logger import get_logger
from src.utils.tables import read_table

logger = get_logger(__name__)

PATTERN_FILE_COLUMNS = ["id", "surface", "family"]

DEFAULT_PATTERNS: Tuple[ProbePattern, ...] = (
    ProbePattern(id="dont", surface="don't", form_class_hint=FormClass.DONT),
    ProbePattern(id="do_not", surface="do not", form_class_hint=FormClass.DONT),
    ProbePattern(id="take_care", surface="take care", form_class_hint=FormClass.NEG_TC),
    ProbePattern(id="make_sure", surface="make sure", form_class_hint=FormClass.NEG_TC),
    ProbePattern(id="ensure", surface="ensure", form_class_hint=FormClass.NEG_TC),
    ProbePattern(id="be_careful", surface="be careful", form_class_hint=FormClass.NEG_TC),
    ProbePattern(id="be_sure", surface="be sure", form_class_hint=FormClass.NEG_TC),
    ProbePattern(id="be_certain", surface="be certain", form_class_hint=FormClass.NEG_TC),
)


class Occurrence(NamedTuple):
    """One pattern hit inside a text, as character offsets."""
    pattern_id: str
    start: int
    end: int


def _word_regex(word: str) -> str:
    # Typographic apostrophes are common in scanned and web text
    return re.escape(word).replace("'", "['’]")


def _first_word_variants(word: str) -> List[str]:
    """Inflected forms accepted for the first word of a multiword pattern."""
    variants = [word, word + "s", word + "ing"]
    if word.endswith("e") and len(word) > 2:
        variants.append(word[:-1] + "ing")
    # Longest first so the alternation never stops at a prefix
    return sorted(set(variants), key=len, reverse=True)


@lru_cache(maxsize=64)
def compile_pattern(surface: str) -> "re.Pattern[str]":
    """
    Build the case-insensitive, word-boundary-respecting regex for a surface string.

    Multiword patterns tolerate an -s/-ing suffix on their first word
    ("taking care", "makes sure"); words may be separated by any whitespace run.
    """
    words = surface.split()
    if len(words) == 1:
        body = _word_regex(words[0])
    else:
        head = "(?:" + "|".join(_word_regex(v) for v in _first_word_variants(words[0])) + ")"
        body = r"\s+".join([head] + [_word_regex(w) for w in words[1:]])
    return re.compile(r"(?<![\w'’])" + body + r"(?![\w'’])", re.IGNORECASE)


def find_occurrences(text: str, patterns: Sequence[ProbePattern]) -> List[Occurrence]:
    """
    Find every pattern occurrence in ``text``.

    Returns:
        Occurrences ordered by start offset, ties in pattern-table order.
    """
    found: List[Tuple[int, int, Occurrence]] = []
    for rank, pattern in enumerate(patterns):
        for match in compile_pattern(pattern.surface).finditer(text):
            found.append((match.start(), rank, Occurrence(pattern.id, match.start(), match.end())))
    found.sort(key=lambda item: (item[0], item[1]))
    return [occurrence for _, _, occurrence in found]


def pattern_index(patterns: Iterable[ProbePattern]) -> dict:
    """Map pattern id -> ProbePattern."""
    return {pattern.id: pattern for pattern in patterns}


def decisive_pattern(
    utterance: Utterance,
    patterns: Sequence[ProbePattern] = DEFAULT_PATTERNS
) -> Optional[str]:
    """
    Return the id of the earliest matched pattern occurrence in the utterance.

    Falls back to the first recorded id when the text no longer contains any
    of the recorded patterns (e.g. a hand-edited matches file).
    """
    if not utterance.matched:
        return None
    matched = set(utterance.matched)
    for occurrence in find_occurrences(utterance.text, patterns):
        if occurrence.pattern_id in matched:
            return occurrence.pattern_id
    return utterance.matched[0]


def load_patterns(path: Union[str, Path]) -> Tuple[ProbePattern, ...]:
    """
    Load a pattern table from CSV with header ``id,surface,family``.

    Args:
        path: Pattern file path

    Returns:
        Immutable tuple of patterns in file order

    Raises:
        CorpusPathError: file missing
        CodingValidationError: bad header, duplicate id or invalid field
    """
    path = Path(path)
    if not path.is_file():
        raise CorpusPathError(str(path), "pattern file not found")

    frame = read_table(path, comments=True)
    if list(frame.columns) != PATTERN_FILE_COLUMNS:
        raise CodingValidationError(
            f"expected header {','.join(PATTERN_FILE_COLUMNS)}, got {','.join(frame.columns)}"
        )

    patterns: List[ProbePattern] = []
    seen = set()
    for row_number, row in enumerate(frame.itertuples(index=False), start=1):
        if row.family not in FormClass.__members__:
            raise CodingValidationError(
                f"unknown family '{row.family}'", row=row_number, column="family"
            )
        try:
            pattern = ProbePattern(
                id=row.id, surface=row.surface, form_class_hint=FormClass(row.family)
            )
        except ValidationError as e:
            column = str(e.errors()[0]["loc"][0]) if e.errors() else None
            raise CodingValidationError(e.errors()[0]["msg"], row=row_number, column=column) from e
        if pattern.id in seen:
            raise CodingValidationError(f"duplicate pattern id '{pattern.id}'", row=row_number, column="id")
        seen.add(pattern.id)
        patterns.append(pattern)

    if not patterns:
        raise CodingValidationError("pattern file defines no patterns")

    logger.info(f"Loaded {len(patterns)} probe patterns from {path}")
    return tuple(patterns)


__all__ = [
    "DEFAULT_PATTERNS",
    "PATTERN_FILE_COLUMNS",
    "Occurrence",
    "compile_pattern",
    "find_occurrences",
    "pattern_index",
    "decisive_pattern",
    "load_patterns",
]
