"""
Corpus data models - probe patterns, extracted utterances and filter verdicts.
"""
from enum import Enum
from typing import Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from src.annotation.schema import FormClass


# The eight probe forms: the DONT family plus the neg-TC family
DONT_FAMILY: Tuple[str, ...] = ("dont", "do_not")
TC_FAMILY: Tuple[str, ...] = (
    "take_care", "make_sure", "ensure", "be_careful", "be_sure", "be_certain"
)
PATTERN_IDS: Tuple[str, ...] = DONT_FAMILY + TC_FAMILY


class RejectReason(str, Enum):
    """Why a probe hit is not a negative imperative."""
    NOT_IMPERATIVE = "NOT_IMPERATIVE"
    NOT_NEGATIVE = "NOT_NEGATIVE"
    MANUAL = "MANUAL"


class ProbePattern(BaseModel):
    """A surface string probed for in the corpus."""

    model_config = ConfigDict(frozen=True)

    id: str
    surface: str
    form_class_hint: FormClass

    @field_validator("id")
    @classmethod
    def _known_id(cls, value: str) -> str:
        if value not in PATTERN_IDS:
            raise ValueError(f"unknown pattern id '{value}' (expected one of {list(PATTERN_IDS)})")
        return value

    @field_validator("surface")
    @classmethod
    def _clean_surface(cls, value: str) -> str:
        if not value or value != value.strip():
            raise ValueError("surface must be nonempty without surrounding whitespace")
        return value.lower()

    @property
    def words(self) -> Tuple[str, ...]:
        return tuple(self.surface.split())


class Utterance(BaseModel):
    """
    One sentence-level segment of a corpus document.

    ``matched`` lists probe pattern ids in order of first occurrence, each once.
    """

    model_config = ConfigDict(frozen=True)

    id: str
    text: str
    source: str
    index: int = Field(ge=0)
    start: int = Field(ge=0)
    end: int = Field(ge=0)
    matched: Tuple[str, ...] = ()

    @model_validator(mode="after")
    def _check_span(self) -> "Utterance":
        if self.end < self.start:
            raise ValueError(f"{self.id}: span end {self.end} precedes start {self.start}")
        if len(set(self.matched)) != len(self.matched):
            raise ValueError(f"{self.id}: duplicate pattern ids in {self.matched}")
        return self

    @property
    def char_span(self) -> Tuple[int, int]:
        return self.start, self.end

    @property
    def sort_key(self) -> Tuple[str, int]:
        return self.source, self.index


class FilterVerdict(BaseModel):
    """Outcome of the negative-imperative filter for one utterance."""

    model_config = ConfigDict(frozen=True)

    utterance_id: str
    keep: bool
    reject_reason: Optional[RejectReason] = None
    overridden: bool = False

    @model_validator(mode="after")
    def _reason_iff_rejected(self) -> "FilterVerdict":
        if self.keep == (self.reject_reason is not None):
            raise ValueError("reject_reason must be present exactly when keep is false")
        return self


__all__ = [
    "DONT_FAMILY",
    "TC_FAMILY",
    "PATTERN_IDS",
    "RejectReason",
    "ProbePattern",
    "Utterance",
    "FilterVerdict",
]
