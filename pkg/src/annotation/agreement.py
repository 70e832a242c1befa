"""
Agreement-subset selection and per-feature label alignment.
"""
from typing import Dict, List

from src.annotation.models import AgreedExample, CodingSet
from src.annotation.schema import FEATURES
from src.utils.errors import (
    CodingDataError,
    InvalidArgumentError,
)
from src.utils.logger import get_logger

logger = get_logger(__name__)


def agreement_subset(codings: CodingSet) -> List[AgreedExample]:
    """
    Keep the examples on which every coder agrees on intentionality AND awareness.

    The form feature is expected to agree everywhere; a form disagreement
    means corrupt input.

    Returns:
        Agreed examples sorted by example id

    Raises:
        InvalidArgumentError: fewer than two coders per example
        CodingDataError: coders disagree on the form of some example
    """
    if len(codings.roster) < 2:
        raise InvalidArgumentError(
            f"agreement needs at least 2 coders, roster is {list(codings.roster)}"
        )

    subset = []
    dropped = 0
    for example_id, records in sorted(codings.by_example().items()):
        forms = {r.form for r in records}
        if len(forms) > 1:
            raise CodingDataError(
                f"coders disagree on the form of example '{example_id}': "
                f"{sorted(f.value for f in forms)}"
            )
        intentions = {r.intentionality for r in records}
        awareness = {r.awareness for r in records}
        if len(intentions) == 1 and len(awareness) == 1:
            subset.append(AgreedExample(
                example_id=example_id,
                intentionality=intentions.pop(),
                awareness=awareness.pop(),
                form=forms.pop(),
            ))
        else:
            dropped += 1

    logger.info(f"Agreement subset: {len(subset)} kept, {dropped} with conflicting function features")
    return subset


def feature_labels(codings: CodingSet, feature: str) -> Dict[str, List[str]]:
    """
    Collect each coder's labels for one feature.

    Returns:
        coder -> labels, coders in roster order, items in example-id order

    Raises:
        InvalidArgumentError: unknown feature or empty coding set
    """
    if feature not in FEATURES:
        raise InvalidArgumentError(f"unknown feature '{feature}' (expected one of {list(FEATURES)})")
    if len(codings) == 0:
        raise InvalidArgumentError("coding set is empty")

    labels: Dict[str, List[str]] = {coder: [] for coder in codings.roster}
    for example_id, records in sorted(codings.by_example().items()):
        for record in records:
            labels[record.coder].append(record.value(feature).value)
    return labels


__all__ = ["agreement_subset", "feature_labels"]
