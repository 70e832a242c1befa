"""
Statistics - inter-coder agreement and feature/form association.
"""
from src.stats.agreement import (
    ReliabilityBand, AgreementReport,
    percent_agreement, kappa, reliability_band,
    agreement_report, format_agreement_reports
)
from src.stats.chi_square import (
    Significance, CRITICAL_VALUES, ChiSquareResult,
    significance_level, expected_counts, chi_square_yates,
    verify_critical_values, format_chi_square_results
)

__all__ = [
    "ReliabilityBand",
    "AgreementReport",
    "percent_agreement",
    "kappa",
    "reliability_band",
    "agreement_report",
    "format_agreement_reports",
    "Significance",
    "CRITICAL_VALUES",
    "ChiSquareResult",
    "significance_level",
    "expected_counts",
    "chi_square_yates",
    "verify_critical_values",
    "format_chi_square_results",
]
