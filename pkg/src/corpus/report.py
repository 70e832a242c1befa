"""
Stage report - how many probe hits survive sampling and filtering, per pattern.
"""
from typing import Dict, List, Optional, Sequence

import pandas as pd
from pydantic import BaseModel, ConfigDict

from src.annotation.schema import FormClass
from src.corpus.models import ProbePattern, Utterance
from src.corpus.patterns import DEFAULT_PATTERNS, decisive_pattern
from src.utils.logger import get_logger

logger = get_logger(__name__)

STAGES = ("Raw Grep", "Raw Sample", "Final Coding")


class StageReport(BaseModel):
    """Per-pattern counts for each pipeline stage, with family totals."""

    model_config = ConfigDict(frozen=True)

    pattern_ids: List[str]
    counts: Dict[str, Dict[str, int]]
    family_totals: Dict[str, Dict[str, int]]
    total_segments: int = 0

    def stage_total(self, stage: str) -> int:
        return sum(self.counts[stage].values())

    @property
    def probed_share(self) -> float:
        """Percentage of all segments returned by the probe."""
        if self.total_segments == 0:
            return 0.0
        return 100.0 * self.stage_total(STAGES[0]) / self.total_segments

    def to_frame(self) -> pd.DataFrame:
        """Stages as rows; pattern columns, then DONT / NEG_TC family totals and overall total."""
        rows = []
        for stage in STAGES:
            row = {pid: self.counts[stage][pid] for pid in self.pattern_ids}
            for family in FormClass:
                row[family.value] = self.family_totals[stage][family.value]
            row["total"] = self.stage_total(stage)
            rows.append(row)
        return pd.DataFrame(rows, index=list(STAGES))


def _count(
    utterances: Sequence[Utterance],
    patterns: Sequence[ProbePattern]
) -> Dict[str, int]:
    counts = {p.id: 0 for p in patterns}
    for utterance in utterances:
        pattern_id = decisive_pattern(utterance, patterns)
        if pattern_id in counts:
            counts[pattern_id] += 1
        else:
            logger.warning(f"{utterance.id}: pattern '{pattern_id}' not in the pattern table")
    return counts


def stage_report(
    raw_hits: Sequence[Utterance],
    sampled: Sequence[Utterance],
    kept: Sequence[Utterance],
    total_segments: Optional[int] = None,
    patterns: Sequence[ProbePattern] = DEFAULT_PATTERNS
) -> StageReport:
    """
    Count each stage's utterances under their earliest matching pattern.

    Args:
        raw_hits: Probe output
        sampled: Sample output
        kept: Utterances that passed the filter
        total_segments: Segment count of the whole corpus (for the probed share)
        patterns: Pattern table, which fixes the column order
    """
    hint = {p.id: p.form_class_hint.value for p in patterns}
    counts = {
        stage: _count(collection, patterns)
        for stage, collection in zip(STAGES, (raw_hits, sampled, kept))
    }
    family_totals = {}
    for stage, stage_counts in counts.items():
        totals = {family.value: 0 for family in FormClass}
        for pattern_id, count in stage_counts.items():
            totals[hint[pattern_id]] += count
        family_totals[stage] = totals

    report = StageReport(
        pattern_ids=[p.id for p in patterns],
        counts=counts,
        family_totals=family_totals,
        total_segments=total_segments if total_segments is not None else 0,
    )
    logger.info(
        "Stage totals: " + ", ".join(f"{s}={report.stage_total(s)}" for s in STAGES)
    )
    return report


def format_stage_report(report: StageReport, fmt: str = "text") -> str:
    """Render the report as a fixed-layout text table or as CSV."""
    frame = report.to_frame()
    if fmt == "csv":
        frame.index.name = "stage"
        return frame.to_csv(lineterminator="\n")

    lines = [frame.to_string()]
    lines.append(
        f"probed segments: {report.stage_total(STAGES[0])} of {report.total_segments} "
        f"({report.probed_share:.1f}%)"
    )
    return "\n".join(lines) + "\n"


__all__ = ["STAGES", "StageReport", "stage_report", "format_stage_report"]
