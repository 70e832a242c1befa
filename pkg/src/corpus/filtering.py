"""
Negative-imperative filter and form classifier.

A probe hit is rejected when it is not an imperative (an overt subject sits
right before the pattern inside its clause, as in "If you don't see ...") or
when it is not negative (a take-care style pattern with no "not", "never"
or n't contraction close after it, as in "Make sure to lock the bit ...").
Hand-made overrides always win.
"""
import re
from pathlib import Path
from typing import Dict, List, Mapping, NamedTuple, Optional, Sequence, Tuple, Union

import pandas as pd

from src.annotation.schema import FormClass
from src.corpus.models import DONT_FAMILY, FilterVerdict, ProbePattern, RejectReason, Utterance
from src.corpus.patterns import DEFAULT_PATTERNS, Occurrence, find_occurrences, pattern_index
from src.utils.config import get_settings
from src.utils.errors import CodingValidationError, CorpusPathError, InvalidArgumentError
from src.utils.logger import get_logger
from src.utils.tables import read_table

logger = get_logger(__name__)

SUBJECT_PRONOUNS = frozenset({"i", "you", "he", "she", "it", "we", "they"})
DETERMINERS = frozenset({
    "the", "a", "an", "this", "these", "those",
    "my", "your", "his", "her", "its", "our", "their",
})
CLAUSE_OPENERS = frozenset({"if", "when", "that"})
SUBORDINATORS = frozenset({
    "if", "when", "that", "because", "since", "while", "although", "though",
    "unless", "until", "before", "after", "as", "once", "whenever", "where",
})
NEGATORS = frozenset({"not", "never"})

_TOKEN = re.compile(r"\w+(?:['’]\w+)*|[^\w\s]")


class Token(NamedTuple):
    text: str
    start: int
    end: int

    @property
    def lower(self) -> str:
        return self.text.lower()


def tokenize(text: str) -> List[Token]:
    """Split on whitespace and punctuation; contractions stay one token."""
    return [Token(m.group(0), m.start(), m.end()) for m in _TOKEN.finditer(text)]


def _clause_tokens(tokens: Sequence[Token]) -> Sequence[Token]:
    """Tokens of the clause that ends where ``tokens`` ends."""
    clause_start = 0
    for i, token in enumerate(tokens):
        if token.text == ";" or token.lower in CLAUSE_OPENERS:
            clause_start = i + 1
        elif token.lower in SUBORDINATORS and i > 0 and tokens[i - 1].text == ",":
            clause_start = i + 1
    return tokens[clause_start:]


def has_overt_subject(tokens: Sequence[Token], occurrence: Occurrence) -> bool:
    """True when a pronoun or determiner + word directly precedes the occurrence in its clause."""
    before = [t for t in tokens if t.end <= occurrence.start]
    clause = _clause_tokens(before)
    if not clause:
        return False
    if clause[-1].lower in SUBJECT_PRONOUNS:
        return True
    return (
        len(clause) >= 2
        and clause[-2].lower in DETERMINERS
        and clause[-1].text[0].isalnum()
    )


def _is_negator(token: Token) -> bool:
    return token.lower in NEGATORS or token.lower.endswith(("n't", "n’t"))


def has_negative_complement(tokens: Sequence[Token], occurrence: Occurrence, window: int) -> bool:
    """True when 'not' or 'never' (or an n't contraction) falls within ``window`` tokens after the occurrence."""
    after = [t for t in tokens if t.start >= occurrence.end][:window]
    return any(_is_negator(t) for t in after)


def _matched_occurrences(u: Utterance, patterns: Sequence[ProbePattern]) -> List[Occurrence]:
    if not u.matched:
        raise InvalidArgumentError(f"{u.id}: utterance has no matched pattern")
    matched = set(u.matched)
    occurrences = [o for o in find_occurrences(u.text, patterns) if o.pattern_id in matched]
    if not occurrences:
        raise InvalidArgumentError(f"{u.id}: matched patterns {list(u.matched)} not found in text")
    return occurrences


def filter_candidate(
    u: Utterance,
    overrides: Optional[Mapping[str, bool]] = None,
    patterns: Sequence[ProbePattern] = DEFAULT_PATTERNS,
    negation_window: Optional[int] = None
) -> FilterVerdict:
    """
    Decide whether a probe hit is a negative imperative.

    An occurrence supports keeping the utterance when it has no overt subject
    and, for take-care style patterns, is followed by a negator. The utterance
    is kept when any occurrence supports it; otherwise it is rejected as
    NOT_IMPERATIVE when every occurrence has a subject, else as NOT_NEGATIVE.

    Args:
        u: Probe hit (nonempty ``matched``)
        overrides: utterance id -> forced keep value
        patterns: Pattern table used for the probe
        negation_window: Tokens searched for a negator (defaults to settings)

    Raises:
        InvalidArgumentError: utterance without matched patterns
    """
    occurrences = _matched_occurrences(u, patterns)

    if overrides and u.id in overrides:
        keep = bool(overrides[u.id])
        logger.debug(f"{u.id}: manual override keep={keep}")
        return FilterVerdict(
            utterance_id=u.id,
            keep=keep,
            reject_reason=None if keep else RejectReason.MANUAL,
            overridden=True,
        )

    window = negation_window or get_settings().negation_window
    tokens = tokenize(u.text)
    subject_flags = []
    supported = False
    for occurrence in occurrences:
        has_subject = has_overt_subject(tokens, occurrence)
        subject_flags.append(has_subject)
        negative = (
            occurrence.pattern_id in DONT_FAMILY
            or has_negative_complement(tokens, occurrence, window)
        )
        if not has_subject and negative:
            supported = True
            break

    if supported:
        return FilterVerdict(utterance_id=u.id, keep=True)

    reason = RejectReason.NOT_IMPERATIVE if all(subject_flags) else RejectReason.NOT_NEGATIVE
    logger.debug(f"{u.id}: rejected ({reason.value})")
    return FilterVerdict(utterance_id=u.id, keep=False, reject_reason=reason)


def classify_form(u: Utterance, patterns: Sequence[ProbePattern] = DEFAULT_PATTERNS) -> FormClass:
    """
    Classify a kept utterance as DONT or NEG_TC.

    The earliest matched occurrence decides when both families appear.

    Raises:
        InvalidArgumentError: utterance without matched patterns
    """
    first = _matched_occurrences(u, patterns)[0]
    return pattern_index(patterns)[first.pattern_id].form_class_hint


def apply_filter(
    hits: Sequence[Utterance],
    overrides: Optional[Mapping[str, bool]] = None,
    patterns: Sequence[ProbePattern] = DEFAULT_PATTERNS,
    negation_window: Optional[int] = None
) -> List[Tuple[Utterance, FilterVerdict, Optional[FormClass]]]:
    """Filter every hit; kept hits carry their form class, rejected ones None."""
    results = []
    for hit in hits:
        verdict = filter_candidate(hit, overrides, patterns, negation_window)
        form = classify_form(hit, patterns) if verdict.keep else None
        results.append((hit, verdict, form))

    kept = sum(1 for _, verdict, _ in results if verdict.keep)
    logger.info(f"Filter kept {kept} of {len(results)} hits")
    return results


def load_overrides(path: Union[str, Path]) -> Dict[str, bool]:
    """
    Load a manual override file with header ``id,keep`` (keep is true/false).

    Raises:
        CorpusPathError: file missing
        CodingValidationError: bad header or keep token
    """
    path = Path(path)
    if not path.is_file():
        raise CorpusPathError(str(path), "overrides file not found")

    frame = read_table(path, comments=True)
    if list(frame.columns) != ["id", "keep"]:
        raise CodingValidationError(f"expected header id,keep, got {','.join(frame.columns)}")

    overrides: Dict[str, bool] = {}
    for row_number, row in enumerate(frame.itertuples(index=False), start=1):
        token = row.keep.strip().lower()
        if token not in ("true", "false"):
            raise CodingValidationError(
                f"keep must be true or false, got '{row.keep}'", row=row_number, column="keep"
            )
        overrides[row.id] = token == "true"

    logger.info(f"Loaded {len(overrides)} filter overrides from {path}")
    return overrides


def save_overrides(overrides: Mapping[str, bool], path: Union[str, Path]) -> None:
    """Write overrides as ``id,keep`` rows sorted by id."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    frame = pd.DataFrame(
        [{"id": key, "keep": "true" if keep else "false"} for key, keep in sorted(overrides.items())],
        columns=["id", "keep"],
    )
    frame.to_csv(path, index=False, lineterminator="\n")
    logger.info(f"Saved {len(overrides)} filter overrides to {path}")


__all__ = [
    "SUBJECT_PRONOUNS",
    "DETERMINERS",
    "NEGATORS",
    "Token",
    "tokenize",
    "has_overt_subject",
    "has_negative_complement",
    "filter_candidate",
    "classify_form",
    "apply_filter",
    "load_overrides",
    "save_overrides",
]
