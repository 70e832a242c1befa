"""
Sentence breaking and corpus loading.

A boundary falls after '.', '!' or '?' (optionally followed by closing quotes
or brackets) when whitespace follows, and at every blank line. A period that
ends a known abbreviation never breaks. Segment spans are trimmed of
surrounding whitespace, so the document is exactly the concatenation of the
spans and the whitespace between them.
"""
import re
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path
from typing import FrozenSet, List, Optional, Tuple, Union

from src.corpus.models import Utterance
from src.utils.config import get_settings
from src.utils.errors import CorpusDecodeError, CorpusPathError, InvalidArgumentError
from src.utils.logger import get_logger

logger = get_logger(__name__)

ABBREVIATIONS: FrozenSet[str] = frozenset({
    "e.g.", "i.e.", "etc.", "vs.", "cf.", "approx.", "fig.", "no.",
    "mr.", "mrs.", "ms.", "dr.", "st.", "jr.",
    # temperature readings ("350 degrees F.")
    "f.", "c.",
})

_PARAGRAPH_BREAK = re.compile(r"\n[ \t\r\f\v]*\n")
_TERMINATOR = re.compile(r"[.!?]+[\"'’”)\]]*(?=\s)")
_OPENING_PUNCT = "\"'‘“(["


def decode_document(data: bytes, source: str = "<bytes>") -> str:
    """
    Decode a corpus document as strict UTF-8.

    Raises:
        CorpusDecodeError: with the offset of the first undecodable byte
    """
    try:
        return data.decode("utf-8")
    except UnicodeDecodeError as e:
        raise CorpusDecodeError(source, e.start, e.reason) from e


def _is_abbreviation(text: str, block_start: int, terminator_end: int) -> bool:
    """Check whether the token ending at ``terminator_end`` is a listed abbreviation."""
    token_start = terminator_end
    while token_start > block_start and not text[token_start - 1].isspace():
        token_start -= 1
    token = text[token_start:terminator_end].lstrip(_OPENING_PUNCT).lower()
    return token in ABBREVIATIONS


def _trimmed(text: str, start: int, end: int) -> Optional[Tuple[int, int]]:
    while start < end and text[start].isspace():
        start += 1
    while end > start and text[end - 1].isspace():
        end -= 1
    return (start, end) if start < end else None


def _block_spans(document_text: str) -> List[Tuple[int, int]]:
    """Split the document at blank lines."""
    spans = []
    position = 0
    for match in _PARAGRAPH_BREAK.finditer(document_text):
        spans.append((position, match.start()))
        position = match.end()
    spans.append((position, len(document_text)))
    return spans


def segment_spans(document_text: str) -> List[Tuple[int, int]]:
    """Return the (start, end) offsets of every segment, in document order."""
    spans: List[Tuple[int, int]] = []
    for block_start, block_end in _block_spans(document_text):
        segment_start = block_start
        for match in _TERMINATOR.finditer(document_text, block_start, block_end):
            if match.group(0)[0] == "." and len(match.group(0).rstrip("\"'’”)]")) == 1:
                if _is_abbreviation(document_text, block_start, match.start() + 1):
                    continue
            span = _trimmed(document_text, segment_start, match.end())
            if span:
                spans.append(span)
            segment_start = match.end()
        span = _trimmed(document_text, segment_start, block_end)
        if span:
            spans.append(span)
    return spans


def break_sentences(document_text: str, source: str = "") -> List[Utterance]:
    """
    Break a document into sentence-level utterances.

    Args:
        document_text: Decoded document text
        source: Document path used for utterance ids (``<source>:<index>``)

    Returns:
        Utterances in document order; empty list for an empty document

    Example:
        >>> [u.text for u in break_sentences("Do not enter. Stay out.")]
        ['Do not enter.', 'Stay out.']
    """
    utterances = []
    for index, (start, end) in enumerate(segment_spans(document_text)):
        utterances.append(Utterance(
            id=f"{source}:{index}",
            text=" ".join(document_text[start:end].split()),
            source=source,
            index=index,
            start=start,
            end=end,
        ))
    logger.debug(f"Segmented {source or '<text>'} into {len(utterances)} utterances")
    return utterances


def _segment_file(path: Path, corpus_dir: Path) -> List[Utterance]:
    source = path.relative_to(corpus_dir).as_posix()
    text = decode_document(path.read_bytes(), source)
    return break_sentences(text, source)


def list_documents(corpus_dir: Union[str, Path]) -> List[Path]:
    """Return the corpus ``*.txt`` files sorted by relative path."""
    corpus_dir = Path(corpus_dir)
    if not corpus_dir.is_dir():
        raise CorpusPathError(str(corpus_dir), "corpus directory does not exist")
    return sorted(corpus_dir.rglob("*.txt"), key=lambda p: p.relative_to(corpus_dir).as_posix())


def load_corpus(corpus_dir: Union[str, Path], workers: Optional[int] = None) -> List[Utterance]:
    """
    Segment every document of a corpus directory.

    Documents are processed on a thread pool; the merged result is ordered by
    (document path, segment index) and therefore identical to a sequential run.

    Args:
        corpus_dir: Directory of UTF-8 ``*.txt`` files (searched recursively)
        workers: Thread count (defaults to the configured ``workers``)

    Raises:
        CorpusPathError: directory missing
        CorpusDecodeError: a document is not valid UTF-8
    """
    corpus_dir = Path(corpus_dir)
    documents = list_documents(corpus_dir)
    workers = workers or get_settings().workers
    if workers < 1:
        raise InvalidArgumentError(f"workers must be >= 1, got {workers}")

    logger.info(f"Segmenting {len(documents)} documents from {corpus_dir} ({workers} workers)")
    with ThreadPoolExecutor(max_workers=workers) as pool:
        per_document = list(pool.map(lambda p: _segment_file(p, corpus_dir), documents))

    utterances = [u for segments in per_document for u in segments]
    utterances.sort(key=lambda u: u.sort_key)
    logger.info(f"Corpus yielded {len(utterances)} utterances")
    return utterances


__all__ = [
    "ABBREVIATIONS",
    "decode_document",
    "segment_spans",
    "break_sentences",
    "list_documents",
    "load_corpus",
]
