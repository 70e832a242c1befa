"""
Reproducible sampling of probe hits.

Selection uses a partial Fisher-Yates shuffle driven by the MINSTD
Lehmer generator, so any implementation seeded the same way picks the same
items.
"""
from collections import OrderedDict
from typing import Dict, List, Sequence, TypeVar

from src.corpus.models import ProbePattern, Utterance
from src.corpus.patterns import DEFAULT_PATTERNS, decisive_pattern
from src.utils.errors import InvalidArgumentError
from src.utils.logger import get_logger

logger = get_logger(__name__)

T = TypeVar("T")

MINSTD_MULTIPLIER = 16807
MINSTD_MODULUS = 2**31 - 1


class MinStdRandom:
    """
    MINSTD linear congruential generator: x' = 16807 * x mod (2^31 - 1).

    The state is seeded as (seed mod (2^31 - 2)) + 1, which is never 0 for
    any 64-bit seed, negative seeds included.
    """

    def __init__(self, seed: int = 0):
        self.state = (seed % (MINSTD_MODULUS - 1)) + 1

    def next(self) -> int:
        """Advance and return the new state, in [1, 2^31 - 2]."""
        self.state = (MINSTD_MULTIPLIER * self.state) % MINSTD_MODULUS
        return self.state

    def below(self, bound: int) -> int:
        """Return an integer in [0, bound) as ``next() mod bound``."""
        if bound < 1:
            raise InvalidArgumentError(f"bound must be positive, got {bound}")
        return self.next() % bound


def sample(hits: Sequence[T], cap: int, seed: int) -> List[T]:
    """
    Draw at most ``cap`` hits, returned in their original order.

    Args:
        hits: Candidate list
        cap: Maximum sample size (>= 1)
        seed: Generator seed

    Returns:
        All hits when ``len(hits) <= cap``; otherwise exactly ``cap`` hits

    Raises:
        InvalidArgumentError: cap < 1
    """
    if cap < 1:
        raise InvalidArgumentError(f"sample cap must be >= 1, got {cap}")
    if len(hits) <= cap:
        return list(hits)

    rng = MinStdRandom(seed)
    positions = list(range(len(hits)))
    for i in range(cap):
        j = i + rng.below(len(hits) - i)
        positions[i], positions[j] = positions[j], positions[i]

    chosen = sorted(positions[:cap])
    logger.debug(f"Sampled {cap} of {len(hits)} hits (seed={seed})")
    return [hits[p] for p in chosen]


def sample_per_pattern(
    hits: Sequence[Utterance],
    cap: int,
    seed: int,
    patterns: Sequence[ProbePattern] = DEFAULT_PATTERNS
) -> List[Utterance]:
    """
    Cap each grammatical form separately.

    Every hit is grouped under its earliest matching pattern; each group is
    sampled with the same seed and the union is returned in input order.
    """
    if cap < 1:
        raise InvalidArgumentError(f"sample cap must be >= 1, got {cap}")

    groups: Dict[str, List[int]] = OrderedDict()
    for position, hit in enumerate(hits):
        key = decisive_pattern(hit, patterns) or ""
        groups.setdefault(key, []).append(position)

    selected: List[int] = []
    for pattern_id, positions in groups.items():
        chosen = sample(positions, cap, seed)
        logger.info(f"Pattern {pattern_id}: kept {len(chosen)} of {len(positions)} hits")
        selected.extend(chosen)

    return [hits[p] for p in sorted(selected)]


__all__ = [
    "MINSTD_MULTIPLIER",
    "MINSTD_MODULUS",
    "MinStdRandom",
    "sample",
    "sample_per_pattern",
]
