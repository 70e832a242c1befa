"""
Realizer - template-based generation of preventative expressions.
"""
from src.realizer.realizer import (
    Variant, TEMPLATES, DEFAULT_VARIANTS, EXPRESSION_PATTERN,
    RealizationRequest, make_request, realize, plan_and_realize
)

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
