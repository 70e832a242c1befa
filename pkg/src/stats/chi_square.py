"""
Chi-square test of association for 2x2 tables with the Yates continuity
correction, and df=1 significance levels.

    chi2 = N * max(|AD - BC| - N/2, 0)^2 / ((A+B)(C+D)(A+C)(B+D))
"""
import math
from enum import Enum
from typing import Dict, List, Sequence

import numpy as np
from pydantic import BaseModel, ConfigDict
from scipy import integrate

from src.annotation.models import ContingencyTable2x2
from src.utils.errors import CriticalValueError, InvalidArgumentError, UndefinedStatisticError
from src.utils.logger import get_logger

logger = get_logger(__name__)


class Significance(str, Enum):
    """Strictest df=1 significance level met by a statistic."""
    NS = "NS"
    P05 = "P05"
    P01 = "P01"
    P001 = "P001"

    @property
    def alpha(self) -> float:
        return {"NS": 1.0, "P05": 0.05, "P01": 0.01, "P001": 0.001}[self.value]

    @property
    def label(self) -> str:
        return "ns" if self is Significance.NS else f"{self.alpha:g}"


# df=1 upper-tail critical values, strictest first
CRITICAL_VALUES: Dict[Significance, float] = {
    Significance.P001: 10.828,
    Significance.P01: 6.635,
    Significance.P05: 3.841,
}

# Below these the corrected 2x2 statistic is flagged as unreliable
MIN_RECOMMENDED_N = 40
MIN_EXPECTED_COUNT = 5.0


class ChiSquareResult(BaseModel):
    """Statistic, significance level and small-sample warning for one table."""

    model_config = ConfigDict(frozen=True)

    statistic: float
    significance: Significance
    n_warning: bool
    n: int
    df: int = 1


def significance_level(statistic: float) -> Significance:
    """
    Return the strictest df=1 level whose critical value the statistic meets.

    Raises:
        InvalidArgumentError: negative statistic
    """
    if statistic < 0:
        raise InvalidArgumentError(f"chi-square statistic cannot be negative, got {statistic}")
    for level, critical in CRITICAL_VALUES.items():
        if statistic >= critical:
            return level
    return Significance.NS


def expected_counts(t: ContingencyTable2x2) -> np.ndarray:
    """Expected cell counts under independence, as a 2x2 array."""
    rows = np.array(t.row_totals, dtype=float)
    columns = np.array(t.column_totals, dtype=float)
    if t.n == 0:
        return np.zeros((2, 2))
    return np.outer(rows, columns) / t.n


def chi_square_yates(t: ContingencyTable2x2) -> ChiSquareResult:
    """
    Yates-corrected chi-square for a 2x2 table.

    The corrected numerator is clamped at zero, so a table with no
    association scores exactly 0.

    Raises:
        UndefinedStatisticError: a row or column of the table is empty
    """
    a, b, c, d = t.cells()
    marginals = (*t.row_totals, *t.column_totals)
    if any(m == 0 for m in marginals):
        raise UndefinedStatisticError(
            f"table {t.cells()} has an empty row or column; chi-square is undefined"
        )

    n = t.n
    corrected = max(abs(a * d - b * c) - n / 2.0, 0.0)
    statistic = n * corrected ** 2 / math.prod(marginals)

    n_warning = n <= MIN_RECOMMENDED_N or bool((expected_counts(t) < MIN_EXPECTED_COUNT).any())
    result = ChiSquareResult(
        statistic=statistic,
        significance=significance_level(statistic),
        n_warning=n_warning,
        n=n,
    )
    if n_warning:
        logger.warning(f"Table {t.cells()}: N={n} or expected counts too small for the approximation")
    logger.debug(f"chi2={statistic:.4f} sig={result.significance.label} for {t.cells()}")
    return result


def chi2_df1_density(x: float) -> float:
    """Density of the chi-square distribution with one degree of freedom."""
    if x <= 0:
        return 0.0
    return math.exp(-x / 2.0) / math.sqrt(2.0 * math.pi * x)


def upper_tail(critical: float) -> float:
    """P(X >= critical) for df=1, by adaptive quadrature of the density."""
    value, _ = integrate.quad(chi2_df1_density, critical, math.inf)
    return value


def verify_critical_values(decimals: int = 3) -> Dict[Significance, float]:
    """
    Integrate the df=1 tail at each tabled critical value.

    Returns:
        level -> tail probability

    Raises:
        CriticalValueError: a tail probability does not round to its level
    """
    tails = {level: upper_tail(critical) for level, critical in CRITICAL_VALUES.items()}
    tolerance = 0.5 * 10 ** -decimals
    for level, tail in tails.items():
        if abs(tail - level.alpha) > tolerance:
            raise CriticalValueError(
                f"critical value {CRITICAL_VALUES[level]} gives tail {tail:.6f}, expected {level.alpha}"
            )
    return tails


def format_chi_square_results(
    results: Dict[str, ChiSquareResult],
    fmt: str = "text"
) -> str:
    """One line per feature: ``chi2=... sig=...`` (text) or CSV rows."""
    lines: List[str] = []
    if fmt == "csv":
        lines.append("feature,n,chi2,sig,n_warning")
        for feature, r in results.items():
            lines.append(
                f"{feature},{r.n},{r.statistic!r},{r.significance.label},{str(r.n_warning).lower()}"
            )
    else:
        for feature, r in results.items():
            warning = " (small-sample warning)" if r.n_warning else ""
            lines.append(f"{feature} chi2={r.statistic:.1f} sig={r.significance.label}{warning}")
    return "\n".join(lines) + "\n"


__all__ = [
    "Significance",
    "CRITICAL_VALUES",
    "ChiSquareResult",
    "significance_level",
    "expected_counts",
    "chi_square_yates",
    "chi2_df1_density",
    "upper_tail",
    "verify_critical_values",
    "format_chi_square_results",
]
