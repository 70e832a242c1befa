"""
Coding schema - the form feature and the two function features.

Each feature is a strictly binary nominal scale. The descriptions double as
the coding manual printed by ``preventkit schema``.
"""
from enum import Enum
from typing import Dict, List, Tuple, Type


class FormClass(str, Enum):
    """Grammatical surface class of a preventative expression."""
    DONT = "DONT"
    NEG_TC = "NEG_TC"


class Intentionality(str, Enum):
    """Whether the agent consciously adopts the intention of performing the negated action."""
    CON = "CON"
    UNC = "UNC"


class Awareness(str, Enum):
    """Whether the agent is aware that the consequences of the negated action are bad."""
    AW = "AW"
    UNAW = "UNAW"


# Feature name -> enum, in coding-file column order
FEATURES: Dict[str, Type[Enum]] = {
    "form": FormClass,
    "intentionality": Intentionality,
    "awareness": Awareness,
}

FUNCTION_FEATURES: Tuple[str, str] = ("intentionality", "awareness")

CODING_MANUAL: Dict[str, Dict[str, str]] = {
    "form": {
        "DONT": (
            "Negative imperative proper, marked by the auxiliary 'do not' or "
            "'don't'. Example: \"Don't sand it or tear it up because this will "
            "put dangerous asbestos fibers into the air.\""
        ),
        "NEG_TC": (
            "Other preventative imperative: take care, be careful, make sure, "
            "ensure, be sure or be certain with a negative complement. Example: "
            "\"Be careful not to damage the walls as you remove the wood base.\""
        ),
    },
    "intentionality": {
        "CON": (
            "The writer expects the reader to intend the negated action, usually "
            "because the reader sees it as equivalent to the action that should be "
            "performed. Example: \"Do not scrub or wet-mop the parquet.\""
        ),
        "UNC": (
            "The reader does not realise there is a choice point: the action is "
            "accidental (\"Be careful not to burn the garlic.\") or is planned "
            "but a crucial feature of it is likely to be overlooked "
            "(\"Don't charge -- or store -- a tool where the temperature is "
            "below 40 degrees F or above 105 degrees.\")."
        ),
    },
    "awareness": {
        "AW": (
            "The reader is aware that the negated action is bad. Example: "
            "\"Be careful not to burn the garlic.\""
        ),
        "UNAW": (
            "The reader is presumed unaware that the negated action is bad. "
            "Example: the tool-charging temperature restriction."
        ),
    },
}


def describe_schema() -> List[Tuple[str, str, str]]:
    """Return (feature, value, description) rows for the coding manual."""
    rows = []
    for feature, values in CODING_MANUAL.items():
        for value, description in values.items():
            rows.append((feature, value, description))
    return rows


__all__ = [
    "FormClass",
    "Intentionality",
    "Awareness",
    "FEATURES",
    "FUNCTION_FEATURES",
    "CODING_MANUAL",
    "describe_schema",
]
