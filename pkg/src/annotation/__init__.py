"""
Annotation - coding schema, multi-coder records, agreement subset and contingency tables.
"""
from src.annotation.schema import (
    FormClass, Intentionality, Awareness,
    FEATURES, FUNCTION_FEATURES, CODING_MANUAL, describe_schema
)
from src.annotation.models import CodingRecord, CodingSet, AgreedExample, ContingencyTable2x2
from src.annotation.io import load_codings, save_codings, save_agreed_subset
from src.annotation.agreement import agreement_subset, feature_labels
from src.annotation.contingency import build_contingency, format_contingency

__all__ = [
    # Schema
    "FormClass",
    "Intentionality",
    "Awareness",
    "FEATURES",
    "FUNCTION_FEATURES",
    "CODING_MANUAL",
    "describe_schema",
    # Models
    "CodingRecord",
    "CodingSet",
    "AgreedExample",
    "ContingencyTable2x2",
    # Operations
    "load_codings",
    "save_codings",
    "save_agreed_subset",
    "agreement_subset",
    "feature_labels",
    "build_contingency",
    "format_contingency",
]
