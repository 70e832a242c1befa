"""
Probe - keep the utterances that contain at least one preventative surface pattern.
"""
from typing import List, Sequence

from src.corpus.models import ProbePattern, Utterance
from src.corpus.patterns import find_occurrences
from src.utils.errors import InvalidArgumentError
from src.utils.logger import get_logger

logger = get_logger(__name__)


def probe(utterances: Sequence[Utterance], patterns: Sequence[ProbePattern]) -> List[Utterance]:
    """
    Return the utterances whose text contains a probe pattern.

    Each returned utterance records every pattern that hit, ordered by first
    occurrence. Input order is preserved.

    Args:
        utterances: Segmented corpus
        patterns: Probe table (nonempty)

    Raises:
        InvalidArgumentError: empty pattern table
    """
    if not patterns:
        raise InvalidArgumentError("probe needs at least one pattern")

    hits = []
    for utterance in utterances:
        matched: List[str] = []
        for occurrence in find_occurrences(utterance.text, patterns):
            if occurrence.pattern_id not in matched:
                matched.append(occurrence.pattern_id)
        if matched:
            hits.append(utterance.model_copy(update={"matched": tuple(matched)}))
            logger.debug(f"{utterance.id}: matched {matched}")

    logger.info(f"Probe found {len(hits)} of {len(utterances)} utterances")
    return hits


__all__ = ["probe"]
