"""
Surface realization of preventative expressions.

The caller supplies the negated action as a base-form verb phrase; the
realizer wraps it in the template for the chosen form and variant.
"""
import re
from enum import Enum
from string import Template
from typing import Dict, Optional, Union

from pydantic import BaseModel, ConfigDict, ValidationError, field_validator, model_validator

from src.annotation.schema import Awareness, FormClass, Intentionality
from src.induction.tree import DecisionTree, predict
from src.utils.errors import InvalidArgumentError
from src.utils.logger import get_logger

logger = get_logger(__name__)


class Variant(str, Enum):
    """Surface variant; FULL/CONTRACTED realize DONT, BE_CAREFUL/TAKE_CARE realize NEG_TC."""
    FULL = "FULL"
    CONTRACTED = "CONTRACTED"
    BE_CAREFUL = "BE_CAREFUL"
    TAKE_CARE = "TAKE_CARE"


TEMPLATES: Dict[Variant, Template] = {
    Variant.FULL: Template("Do not $action"),
    Variant.CONTRACTED: Template("Don't $action"),
    Variant.BE_CAREFUL: Template("Be careful not to $action"),
    Variant.TAKE_CARE: Template("Take care not to $action"),
}

VARIANT_FORMS: Dict[Variant, FormClass] = {
    Variant.FULL: FormClass.DONT,
    Variant.CONTRACTED: FormClass.DONT,
    Variant.BE_CAREFUL: FormClass.NEG_TC,
    Variant.TAKE_CARE: FormClass.NEG_TC,
}

DEFAULT_VARIANTS: Dict[FormClass, Variant] = {
    FormClass.DONT: Variant.FULL,
    FormClass.NEG_TC: Variant.BE_CAREFUL,
}

EXPRESSION_PATTERN = re.compile(r"^(Do not|Don't|Be careful not to|Take care not to) .+\.$")

_FIRST_WORD = re.compile(r"^\W*(\w+)")


def _clean(text: str) -> str:
    """Collapse whitespace and drop trailing periods."""
    return " ".join(text.split()).rstrip(".").rstrip()


class RealizationRequest(BaseModel):
    """Form, variant, negated action and an optional trailing clause."""

    model_config = ConfigDict(frozen=True)

    form: FormClass
    variant: Optional[Variant] = None
    action: str
    trailing: Optional[str] = None

    @field_validator("action")
    @classmethod
    def _action_present(cls, value: str) -> str:
        if not _clean(value):
            raise ValueError("action must be a nonempty verb phrase")
        return value

    @model_validator(mode="after")
    def _variant_matches_form(self) -> "RealizationRequest":
        if self.variant is None:
            object.__setattr__(self, "variant", DEFAULT_VARIANTS[self.form])
        elif VARIANT_FORMS[self.variant] is not self.form:
            raise ValueError(f"variant {self.variant.value} cannot realize form {self.form.value}")
        return self


def make_request(
    form: Union[str, FormClass],
    action: str,
    variant: Union[str, Variant, None] = None,
    trailing: Optional[str] = None
) -> RealizationRequest:
    """
    Build a request, reporting any invalid field as an argument error.

    Raises:
        InvalidArgumentError: unknown form/variant, empty action or a
            variant that does not realize the form
    """
    try:
        return RealizationRequest(form=form, variant=variant, action=action, trailing=trailing)
    except ValidationError as e:
        messages = "; ".join(error["msg"] for error in e.errors())
        raise InvalidArgumentError(messages) from e


def _join_trailing(body: str, trailing: Optional[str]) -> str:
    clause = _clean(trailing or "")
    if not clause:
        return body
    match = _FIRST_WORD.match(clause)
    # Participial clauses attach with a comma, reasons and purposes with a space
    if match and match.group(1).lower().endswith("ing"):
        return f"{body}, {clause}"
    return f"{body} {clause}"


def realize(request: RealizationRequest) -> str:
    """
    Render a request as one sentence with exactly one terminal period.

    Examples:
        DONT/FULL "scrub or wet-mop the parquet" -> "Do not scrub or wet-mop the parquet."
    """
    body = TEMPLATES[request.variant].substitute(action=_clean(request.action))
    sentence = _join_trailing(body, request.trailing)
    sentence = sentence[0].upper() + sentence[1:] + "."
    logger.debug(f"Realized {request.form.value}/{request.variant.value}: {sentence}")
    return sentence


def plan_and_realize(
    tree: DecisionTree,
    intentionality: Union[str, Intentionality],
    awareness: Union[str, Awareness],
    action: str,
    variant: Union[str, Variant, None] = None,
    trailing: Optional[str] = None
) -> str:
    """
    Choose the form with the tree, then realize it.

    Without a ``variant`` preference DONT is realized as "Do not" and NEG_TC
    as "Be careful not to". A preference that does not fit the predicted
    form is an argument error.
    """
    prediction = predict(tree, intentionality, awareness)
    logger.info(
        f"Planned {prediction.label.value} for ({intentionality}, {awareness}) "
        f"with confidence {prediction.confidence:.3f}"
    )
    return realize(make_request(prediction.label, action, variant, trailing))


__all__ = [
    "Variant",
    "TEMPLATES",
    "DEFAULT_VARIANTS",
    "EXPRESSION_PATTERN",
    "RealizationRequest",
    "make_request",
    "realize",
    "plan_and_realize",
]
