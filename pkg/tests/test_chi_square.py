"""
Tests for the Yates-corrected chi-square and df=1 significance levels.
"""
import numpy as np
import pytest
from scipy.stats import chi2

from src.annotation import ContingencyTable2x2, build_contingency
from src.stats import (
    CRITICAL_VALUES,
    Significance,
    chi_square_yates,
    expected_counts,
    format_chi_square_results,
    significance_level,
    verify_critical_values,
)
from src.utils.errors import CriticalValueError, InvalidArgumentError, UndefinedStatisticError


def _table(a, b, c, d):
    return ContingencyTable2x2(a=a, b=b, c=c, d=d)


def test_intentionality_association(agreed165):
    result = chi_square_yates(build_contingency(agreed165, "intentionality"))
    assert result.statistic == pytest.approx(51.426, abs=1e-3)
    assert result.significance is Significance.P001
    assert not result.n_warning
    assert result.df == 1


def test_awareness_association(agreed165):
    result = chi_square_yates(build_contingency(agreed165, "awareness"))
    assert result.statistic == pytest.approx(56.898, abs=1e-3)
    assert result.significance is Significance.P001


def test_small_table_carries_warning():
    result = chi_square_yates(_table(10, 0, 0, 10))
    assert result.statistic == pytest.approx(16.2)
    assert result.significance is Significance.P001
    assert result.n_warning


def test_no_association_scores_zero():
    result = chi_square_yates(_table(25, 25, 25, 25))
    assert result.statistic == 0.0
    assert result.significance is Significance.NS


def test_correction_is_clamped():
    # |AD - BC| = 10 does not exceed N/2 = 10
    assert chi_square_yates(_table(5, 5, 4, 6)).statistic == 0.0


def test_empty_marginal_is_undefined():
    with pytest.raises(UndefinedStatisticError):
        chi_square_yates(_table(10, 5, 0, 0))
    with pytest.raises(UndefinedStatisticError):
        chi_square_yates(_table(0, 5, 0, 7))


@pytest.mark.parametrize("statistic, level", [
    (3.0, Significance.NS),
    (3.841, Significance.P05),
    (6.7, Significance.P01),
    (10.828, Significance.P001),
    (51.4, Significance.P001),
])
def test_significance_level(statistic, level):
    assert significance_level(statistic) is level


def test_negative_statistic_is_rejected():
    with pytest.raises(InvalidArgumentError):
        significance_level(-0.1)


@pytest.mark.parametrize("cells", [(61, 45, 0, 59), (3, 103, 32, 27), (7, 2, 3, 9), (12, 30, 18, 11)])
def test_transposition_leaves_statistic_unchanged(cells):
    table = _table(*cells)
    assert chi_square_yates(table.transposed()).statistic == pytest.approx(chi_square_yates(table).statistic)


@pytest.mark.parametrize("cells", [(7, 2, 3, 9), (12, 30, 18, 11), (5, 5, 4, 6), (3, 103, 32, 27)])
@pytest.mark.parametrize("k", [2, 3])
def test_scaling_never_lowers_significance(cells, k):
    order = list(Significance)
    base = chi_square_yates(_table(*cells)).significance
    scaled = chi_square_yates(_table(*cells).scaled(k)).significance
    assert order.index(scaled) >= order.index(base)


def test_critical_values_match_reference_distribution():
    for level, critical in CRITICAL_VALUES.items():
        assert round(chi2.sf(critical, df=1), 3) == pytest.approx(level.alpha)


def test_quadrature_reproduces_tail_probabilities():
    tails = verify_critical_values()
    for level, tail in tails.items():
        assert tail == pytest.approx(chi2.sf(CRITICAL_VALUES[level], df=1), abs=1e-6)


def test_mistabled_critical_value_is_reported(monkeypatch):
    monkeypatch.setitem(CRITICAL_VALUES, Significance.P05, 3.0)
    with pytest.raises(CriticalValueError, match="critical value 3.0"):
        verify_critical_values()


def test_expected_counts():
    expected = expected_counts(_table(61, 45, 0, 59))
    assert expected.sum() == pytest.approx(165)
    assert np.allclose(expected.sum(axis=1), [106, 59])
    assert expected[0, 0] == pytest.approx(106 * 61 / 165)


def test_text_and_csv_formats():
    results = {"intentionality": chi_square_yates(_table(61, 45, 0, 59)),
               "small": chi_square_yates(_table(10, 0, 0, 10))}
    text = format_chi_square_results(results).splitlines()
    assert text == ["intentionality chi2=51.4 sig=0.001", "small chi2=16.2 sig=0.001 (small-sample warning)"]
    csv = format_chi_square_results(results, fmt="csv").splitlines()
    assert csv[0] == "feature,n,chi2,sig,n_warning"
    assert csv[2].startswith("small,20,16.2")
    assert csv[2].endswith(",0.001,true")
