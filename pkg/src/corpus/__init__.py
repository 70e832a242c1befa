"""
Corpus extraction - segmentation, probing, sampling, filtering and stage counts.
"""
from src.corpus.models import (
    DONT_FAMILY, TC_FAMILY, PATTERN_IDS,
    RejectReason, ProbePattern, Utterance, FilterVerdict
)
from src.corpus.patterns import (
    DEFAULT_PATTERNS, find_occurrences, decisive_pattern, load_patterns
)
from src.corpus.segmenter import decode_document, break_sentences, load_corpus
from src.corpus.probe import probe
from src.corpus.sampling import MinStdRandom, sample, sample_per_pattern
from src.corpus.filtering import (
    filter_candidate, classify_form, apply_filter, load_overrides, save_overrides
)
from src.corpus.report import StageReport, stage_report, format_stage_report
from src.corpus.io import (
    utterances_to_frame, write_utterances, read_utterances,
    verdicts_to_frame, write_verdicts, read_kept_ids
)

__all__ = [
    # Models
    "DONT_FAMILY",
    "TC_FAMILY",
    "PATTERN_IDS",
    "RejectReason",
    "ProbePattern",
    "Utterance",
    "FilterVerdict",
    # Patterns
    "DEFAULT_PATTERNS",
    "find_occurrences",
    "decisive_pattern",
    "load_patterns",
    # Pipeline stages
    "decode_document",
    "break_sentences",
    "load_corpus",
    "probe",
    "MinStdRandom",
    "sample",
    "sample_per_pattern",
    "filter_candidate",
    "classify_form",
    "apply_filter",
    "load_overrides",
    "save_overrides",
    # Reporting and I/O
    "StageReport",
    "stage_report",
    "format_stage_report",
    "utterances_to_frame",
    "write_utterances",
    "read_utterances",
    "verdicts_to_frame",
    "write_verdicts",
    "read_kept_ids",
]
