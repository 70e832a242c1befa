"""
Inter-coder agreement for nominal features: percent agreement, the K
coefficient and reliability bands.

K = (P(A) - P(E)) / (1 - P(E)), with P(E) = sum_j p_j^2 where p_j is the
proportion of all assignments (both coders pooled) that fall in category j.
"""
from enum import Enum
from fractions import Fraction
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict

from src.annotation.agreement import feature_labels
from src.annotation.models import CodingSet
from src.annotation.schema import FEATURES
from src.utils.errors import (
    DegenerateMarginalsError,
    InvalidArgumentError,
    UnsupportedRosterError,
)
from src.utils.logger import get_logger

logger = get_logger(__name__)


class ReliabilityBand(str, Enum):
    """Qualitative reliability label for a K value."""
    SLIGHT = "SLIGHT"
    FAIR = "FAIR"
    MODERATE = "MODERATE"
    SUBSTANTIAL = "SUBSTANTIAL"
    ALMOST_PERFECT = "ALMOST_PERFECT"
    BELOW_SLIGHT = "BELOW_SLIGHT"


# Upper-inclusive band limits
BAND_LIMITS: Tuple[Tuple[float, ReliabilityBand], ...] = (
    (0.20, ReliabilityBand.SLIGHT),
    (0.40, ReliabilityBand.FAIR),
    (0.60, ReliabilityBand.MODERATE),
    (0.80, ReliabilityBand.SUBSTANTIAL),
    (1.00, ReliabilityBand.ALMOST_PERFECT),
)


class AgreementReport(BaseModel):
    """P(A), P(E), K and the category proportions behind them, for one feature."""

    model_config = ConfigDict(frozen=True)

    feature: str
    n_items: int
    p_a: float
    p_e: float
    category_proportions: Dict[str, float]
    kappa: float
    band: ReliabilityBand


def _pair(codings: Mapping[str, Sequence[str]]) -> Tuple[Sequence[str], Sequence[str]]:
    if len(codings) != 2:
        raise UnsupportedRosterError(
            f"pairwise agreement needs exactly 2 coders, got {len(codings)}: {sorted(codings)}"
        )
    first, second = (codings[coder] for coder in codings)
    if len(first) != len(second):
        raise InvalidArgumentError(
            f"coders labelled different item counts ({len(first)} vs {len(second)})"
        )
    if len(first) == 0:
        raise InvalidArgumentError("cannot measure agreement on an empty item set")
    return first, second


def percent_agreement(codings: Mapping[str, Sequence[str]]) -> float:
    """
    Proportion of items on which the two coders assign the same label.

    Args:
        codings: coder -> labels, items aligned by position

    Raises:
        InvalidArgumentError: empty or misaligned item set
        UnsupportedRosterError: not exactly two coders
    """
    first, second = _pair(codings)
    agreed = sum(1 for x, y in zip(first, second) if x == y)
    return agreed / len(first)


def confusion_matrix(
    first: Sequence[str],
    second: Sequence[str],
    categories: Sequence[str]
) -> np.ndarray:
    """Counts of (coder 1 label, coder 2 label) pairs, in ``categories`` order."""
    position = {category: i for i, category in enumerate(categories)}
    matrix = np.zeros((len(categories), len(categories)), dtype=np.int64)
    for x, y in zip(first, second):
        matrix[position[x], position[y]] += 1
    return matrix


def reliability_band(kappa_value: float) -> ReliabilityBand:
    """
    Map a K value to its reliability band.

    Limits 0.20/0.40/0.60/0.80 are upper-inclusive; negative values are
    BELOW_SLIGHT.

    Raises:
        InvalidArgumentError: kappa_value > 1
    """
    if kappa_value > 1.0:
        raise InvalidArgumentError(f"kappa cannot exceed 1, got {kappa_value}")
    if kappa_value < 0.0:
        return ReliabilityBand.BELOW_SLIGHT
    for limit, band in BAND_LIMITS:
        if kappa_value <= limit:
            return band
    return ReliabilityBand.ALMOST_PERFECT


def kappa(
    codings: Mapping[str, Sequence[str]],
    feature: str = "",
    categories: Optional[Sequence[str]] = None
) -> AgreementReport:
    """
    Compute the K coefficient for two coders.

    Args:
        codings: coder -> labels, items aligned by position
        feature: Feature name, used for the report and the default category list
        categories: Category order (defaults to the feature's enum values, then
            to the sorted observed labels)

    Raises:
        InvalidArgumentError: empty item set or a label outside ``categories``
        UnsupportedRosterError: not exactly two coders
        DegenerateMarginalsError: all assignments in one category (P(E) = 1)
    """
    first, second = _pair(codings)
    if categories is None:
        categories = list(FEATURES[feature].__members__) if feature in FEATURES else []
    observed = sorted(set(first) | set(second))
    unknown = [label for label in observed if label not in categories]
    if categories and unknown:
        raise InvalidArgumentError(f"labels {unknown} are not categories of '{feature}'")
    if not categories:
        categories = observed

    matrix = confusion_matrix(first, second, categories)
    n_items = int(matrix.sum())
    # Pooled marginals: row sums are coder 1, column sums coder 2
    pooled_counts = matrix.sum(axis=1) + matrix.sum(axis=0)
    # Exact fractions so values on a band limit (K = 0.6) are not nudged across it
    exact_a = Fraction(int(np.trace(matrix)), n_items)
    exact_e = sum((Fraction(int(c), 2 * n_items) ** 2 for c in pooled_counts), Fraction(0))

    if exact_e == 1:
        raise DegenerateMarginalsError(
            f"{feature or 'feature'}: every assignment is in one category, K is undefined"
        )

    p_a, p_e = float(exact_a), float(exact_e)
    k = float((exact_a - exact_e) / (1 - exact_e))
    report = AgreementReport(
        feature=feature,
        n_items=n_items,
        p_a=p_a,
        p_e=p_e,
        category_proportions={c: int(count) / (2.0 * n_items) for c, count in zip(categories, pooled_counts)},
        kappa=k,
        band=reliability_band(min(k, 1.0)),
    )
    logger.info(f"{feature}: P(A)={p_a:.3f} P(E)={p_e:.3f} K={k:.3f} ({report.band.value})")
    return report


def agreement_report(codings: CodingSet, feature: str) -> AgreementReport:
    """K for one feature of a two-coder coding set."""
    return kappa(feature_labels(codings, feature), feature=feature)


def format_agreement_reports(
    reports: Sequence[AgreementReport],
    fmt: str = "text",
    precision: int = 3
) -> str:
    """One line per feature: ``P(A)=... P(E)=... K=... band=...`` (text) or CSV rows."""
    lines: List[str] = []
    if fmt == "csv":
        lines.append("feature,n_items,p_a,p_e,kappa,band")
        for r in reports:
            lines.append(f"{r.feature},{r.n_items},{r.p_a!r},{r.p_e!r},{r.kappa!r},{r.band.value}")
    else:
        for r in reports:
            lines.append(
                f"{r.feature} P(A)={r.p_a:.{precision}f} P(E)={r.p_e:.{precision}f} "
                f"K={r.kappa:.{precision}f} band={r.band.value}"
            )
    return "\n".join(lines) + "\n"


__all__ = [
    "ReliabilityBand",
    "BAND_LIMITS",
    "AgreementReport",
    "percent_agreement",
    "confusion_matrix",
    "reliability_band",
    "kappa",
    "agreement_report",
    "format_agreement_reports",
]
