"""
Extraction pipeline: probe -> sample -> filter -> stage report in one run.
"""
from pathlib import Path
from typing import List, Optional, Sequence, Tuple

from src.annotation.schema import FormClass
from src.cli.config import RunConfig
from src.corpus import (
    DEFAULT_PATTERNS,
    FilterVerdict,
    ProbePattern,
    StageReport,
    Utterance,
    apply_filter,
    format_stage_report,
    load_corpus,
    load_overrides,
    load_patterns,
    probe,
    sample_per_pattern,
    stage_report,
    write_utterances,
    write_verdicts,
)
from src.utils.errors import InvalidArgumentError
from src.utils.logger import LoggerMixin

FilterResult = Tuple[Utterance, FilterVerdict, Optional[FormClass]]


class ExtractionPipeline(LoggerMixin):
    """
    Runs the automatic stages over one corpus directory.

    Artifacts written to ``output_dir``:
        matches.csv   probe hits
        sample.csv    per-pattern sample
        verdicts.csv  filter results
        report.txt    stage report (report.csv with --format csv)
    """

    def __init__(self, config: RunConfig):
        if config.corpus_dir is None:
            raise InvalidArgumentError("pipeline needs a corpus directory")
        self.config = config.check_paths()
        self.patterns: Sequence[ProbePattern] = (
            load_patterns(config.patterns_file) if config.patterns_file else DEFAULT_PATTERNS
        )

    def run(self) -> StageReport:
        config = self.config
        segments = load_corpus(config.corpus_dir)
        hits = probe(segments, self.patterns)
        sampled = sample_per_pattern(hits, config.cap, config.seed, self.patterns)

        overrides = {}
        if config.overrides_file is not None and config.overrides_file.is_file():
            overrides = load_overrides(config.overrides_file)
        results: List[FilterResult] = apply_filter(sampled, overrides, self.patterns)
        kept = [u for u, verdict, _ in results if verdict.keep]

        report = stage_report(hits, sampled, kept, len(segments), self.patterns)
        if config.output_dir is not None:
            self._write(hits, sampled, results, report)
        self.logger.info(
            f"Pipeline finished: {len(hits)} hits, {len(sampled)} sampled, {len(kept)} kept"
        )
        return report

    def _write(
        self,
        hits: Sequence[Utterance],
        sampled: Sequence[Utterance],
        results: Sequence[FilterResult],
        report: StageReport
    ) -> None:
        out: Path = self.config.output_dir
        out.mkdir(parents=True, exist_ok=True)
        write_utterances(hits, out / "matches.csv")
        write_utterances(sampled, out / "sample.csv")
        write_verdicts(results, out / "verdicts.csv")

        fmt = self.config.report_format
        report_path = out / ("report.csv" if fmt == "csv" else "report.txt")
        report_path.write_text(format_stage_report(report, fmt), encoding="utf-8")
        self.logger.info(f"Artifacts written to {out}")


__all__ = ["ExtractionPipeline"]
