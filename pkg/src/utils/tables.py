"""
Reading the toolkit's CSV inputs.

Files are decoded as strict UTF-8. Formats that allow comments drop lines
starting with ``#`` before parsing; a ``#`` anywhere else is data.
"""
import io
from pathlib import Path
from typing import Union

import pandas as pd

from src.utils.errors import CodingValidationError, CorpusDecodeError


def _strip_comment_lines(text: str) -> str:
    return "".join(line for line in text.splitlines(keepends=True) if not line.startswith("#"))


def read_table(path: Union[str, Path], comments: bool = False, **read_kwargs) -> pd.DataFrame:
    """
    Read a CSV file into a frame of strings.

    Args:
        path: CSV path (existence is checked by the caller)
        comments: Drop whole lines starting with ``#``
        **read_kwargs: Extra ``pandas.read_csv`` options

    Raises:
        CorpusDecodeError: file is not valid UTF-8 (with the byte offset)
        CodingValidationError: file is empty or not parseable as CSV
    """
    path = Path(path)
    try:
        text = path.read_bytes().decode("utf-8")
    except UnicodeDecodeError as e:
        raise CorpusDecodeError(str(path), e.start, e.reason) from e

    if comments:
        text = _strip_comment_lines(text)

    try:
        return pd.read_csv(io.StringIO(text), dtype=str, keep_default_na=False, **read_kwargs)
    except pd.errors.EmptyDataError as e:
        raise CodingValidationError(f"{path}: file has no header row") from e
    except pd.errors.ParserError as e:
        detail = str(e).strip().splitlines()[0] if str(e).strip() else "malformed CSV"
        raise CodingValidationError(f"{path}: {detail}") from e


__all__ = ["read_table"]
