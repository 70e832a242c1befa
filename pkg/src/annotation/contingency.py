"""
Contingency tables - form class cross-tabulated against one function feature.
"""
from typing import Sequence

import pandas as pd

from src.annotation.models import AgreedExample, ContingencyTable2x2
from src.annotation.schema import FUNCTION_FEATURES, FEATURES, FormClass
from src.utils.errors import InvalidArgumentError
from src.utils.logger import get_logger

logger = get_logger(__name__)


def build_contingency(subset: Sequence[AgreedExample], feature: str) -> ContingencyTable2x2:
    """
    Cross-tabulate form (rows DONT, NEG_TC) against a function feature.

    Columns are (CON, UNC) for intentionality and (AW, UNAW) for awareness.

    Raises:
        InvalidArgumentError: empty subset or unknown feature
    """
    if feature not in FUNCTION_FEATURES:
        raise InvalidArgumentError(
            f"feature must be one of {list(FUNCTION_FEATURES)}, got '{feature}'"
        )
    if not subset:
        raise InvalidArgumentError("cannot build a contingency table from an empty subset")

    rows = [form.value for form in FormClass]
    columns = list(FEATURES[feature].__members__)
    frame = pd.DataFrame(
        {
            "form": [example.form.value for example in subset],
            feature: [getattr(example, feature).value for example in subset],
        }
    )
    counts = (
        pd.crosstab(frame["form"], frame[feature])
        .reindex(index=rows, columns=columns, fill_value=0)
    )

    table = ContingencyTable2x2(
        a=int(counts.iat[0, 0]),
        b=int(counts.iat[0, 1]),
        c=int(counts.iat[1, 0]),
        d=int(counts.iat[1, 1]),
        row_labels=(rows[0], rows[1]),
        column_labels=(columns[0], columns[1]),
    )
    logger.debug(f"Contingency for {feature}: {table.cells()} (N={table.n})")
    return table


def format_contingency(table: ContingencyTable2x2) -> str:
    """Render the table with row and column totals."""
    (a, b, c, d), (r0, r1), (c0, c1) = table.cells(), table.row_totals, table.column_totals
    frame = pd.DataFrame(
        [[a, b, r0], [c, d, r1], [c0, c1, table.n]],
        index=[table.row_labels[0], table.row_labels[1], "Total"],
        columns=[table.column_labels[0], table.column_labels[1], "Total"],
    )
    return frame.to_string()


__all__ = ["build_contingency", "format_contingency"]
