"""
Annotation data models - coder judgments, coding sets and 2x2 contingency tables.
"""
from collections import defaultdict
from typing import Dict, FrozenSet, Iterator, List, Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator

from src.annotation.schema import Awareness, FormClass, Intentionality


class CodingRecord(BaseModel):
    """One coder's judgment of one example."""

    model_config = ConfigDict(frozen=True)

    example_id: str = Field(min_length=1)
    coder: str = Field(min_length=1)
    form: FormClass
    intentionality: Intentionality
    awareness: Awareness

    def value(self, feature: str):
        """Return the label for a feature name (form, intentionality, awareness)."""
        return getattr(self, feature)


class CodingSet(BaseModel):
    """
    Validated coding records.

    Invariants: (example_id, coder) pairs are unique and every example is
    coded by the same roster. Records are kept sorted by (example_id, coder),
    so equality does not depend on file order.
    """

    model_config = ConfigDict(frozen=True)

    records: Tuple[CodingRecord, ...]

    @model_validator(mode="before")
    @classmethod
    def _sort_records(cls, data):
        if isinstance(data, dict) and "records" in data:
            data = dict(data)
            data["records"] = tuple(sorted(data["records"], key=_record_key))
        return data

    @model_validator(mode="after")
    def _check_roster(self) -> "CodingSet":
        seen = set()
        for record in self.records:
            key = (record.example_id, record.coder)
            if key in seen:
                raise ValueError(f"duplicate coding for example '{key[0]}' by coder '{key[1]}'")
            seen.add(key)
        rosters = {eid: frozenset(r.coder for r in recs) for eid, recs in self.by_example().items()}
        if len(set(rosters.values())) > 1:
            expected = max(rosters.values(), key=len)
            for eid, roster in rosters.items():
                if roster != expected:
                    raise ValueError(
                        f"example '{eid}' coded by {sorted(roster)}, expected {sorted(expected)}"
                    )
        return self

    def by_example(self) -> Dict[str, List[CodingRecord]]:
        grouped: Dict[str, List[CodingRecord]] = defaultdict(list)
        for record in self.records:
            grouped[record.example_id].append(record)
        return dict(grouped)

    @property
    def roster(self) -> Tuple[str, ...]:
        return tuple(sorted({r.coder for r in self.records}))

    @property
    def example_ids(self) -> Tuple[str, ...]:
        return tuple(sorted({r.example_id for r in self.records}))

    def __len__(self) -> int:
        return len(self.records)

    def __iter__(self) -> Iterator[CodingRecord]:
        return iter(self.records)


def _record_key(record) -> Tuple[str, str]:
    if isinstance(record, CodingRecord):
        return record.example_id, record.coder
    return record["example_id"], record["coder"]


class AgreedExample(BaseModel):
    """An example on which all coders agree for both function features."""

    model_config = ConfigDict(frozen=True)

    example_id: str
    intentionality: Intentionality
    awareness: Awareness
    form: FormClass


class ContingencyTable2x2(BaseModel):
    """
    Form class (rows) against one binary feature (columns).

              col[0]  col[1]
      row[0]    A       B
      row[1]    C       D
    """

    model_config = ConfigDict(frozen=True)

    a: int = Field(ge=0)
    b: int = Field(ge=0)
    c: int = Field(ge=0)
    d: int = Field(ge=0)
    row_labels: Tuple[str, str] = (FormClass.DONT.value, FormClass.NEG_TC.value)
    column_labels: Tuple[str, str] = ("col0", "col1")

    @property
    def n(self) -> int:
        return self.a + self.b + self.c + self.d

    @property
    def row_totals(self) -> Tuple[int, int]:
        return self.a + self.b, self.c + self.d

    @property
    def column_totals(self) -> Tuple[int, int]:
        return self.a + self.c, self.b + self.d

    def cells(self) -> Tuple[int, int, int, int]:
        return self.a, self.b, self.c, self.d

    def transposed(self) -> "ContingencyTable2x2":
        return ContingencyTable2x2(
            a=self.a, b=self.c, c=self.b, d=self.d,
            row_labels=self.column_labels, column_labels=self.row_labels,
        )

    def scaled(self, k: int) -> "ContingencyTable2x2":
        return self.model_copy(update={"a": self.a * k, "b": self.b * k, "c": self.c * k, "d": self.d * k})


__all__ = [
    "CodingRecord",
    "CodingSet",
    "AgreedExample",
    "ContingencyTable2x2",
]
