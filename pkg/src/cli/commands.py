"""
Subcommand handlers. Each receives the parsed arguments, writes its report to
stdout (or its artifact to ``--output``) and returns an exit status.
"""
import argparse
import sys
from datetime import datetime, timezone
from typing import Dict, List, Mapping, Optional, Sequence

import pandas as pd
from pydantic import ValidationError

from src.annotation import (
    FUNCTION_FEATURES,
    agreement_subset,
    build_contingency,
    describe_schema,
    format_contingency,
    load_codings,
    save_agreed_subset,
)
from src.annotation.schema import Awareness, Intentionality
from src.cli.config import RunConfig, resolve_cap, resolve_seed
from src.cli.pipeline import ExtractionPipeline
from src.corpus import (
    DEFAULT_PATTERNS,
    ProbePattern,
    Utterance,
    apply_filter,
    filter_candidate,
    format_stage_report,
    load_corpus,
    load_overrides,
    load_patterns,
    probe,
    read_kept_ids,
    read_utterances,
    sample,
    sample_per_pattern,
    save_overrides,
    stage_report,
    utterances_to_frame,
    verdicts_to_frame,
    write_utterances,
    write_verdicts,
)
from src.induction import (
    describe_tree,
    induce,
    load_tree,
    predict,
    save_tree,
    training_accuracy,
    training_instances,
)
from src.realizer import make_request, plan_and_realize, realize
from src.stats import (
    agreement_report,
    chi_square_yates,
    format_agreement_reports,
    format_chi_square_results,
)
from src.utils.config import get_settings
from src.utils.errors import DegenerateMarginalsError, InvalidArgumentError
from src.utils.logger import get_logger

logger = get_logger(__name__)

AGREEMENT_FEATURES = ("form",) + FUNCTION_FEATURES


def _emit(text: str, args: argparse.Namespace) -> None:
    if getattr(args, "stamp", False):
        stamp = datetime.now(timezone.utc).isoformat(timespec="seconds")
        text = f"# generated {stamp}\n" + text
    sys.stdout.write(text)


def _frame_csv(frame: pd.DataFrame) -> str:
    return frame.to_csv(index=False, lineterminator="\n")


def _patterns(args: argparse.Namespace) -> Sequence[ProbePattern]:
    path = getattr(args, "patterns", None)
    return load_patterns(path) if path else DEFAULT_PATTERNS


def _run_config(**fields) -> RunConfig:
    """Build and path-check a RunConfig, reporting field errors as argument errors."""
    try:
        config = RunConfig(**{k: v for k, v in fields.items() if v is not None})
    except ValidationError as e:
        messages = "; ".join(
            f"{'.'.join(str(p) for p in error['loc'])}: {error['msg']}" for error in e.errors()
        )
        raise InvalidArgumentError(messages) from e
    return config.check_paths()


def _write_utterances_or_print(
    utterances: Sequence[Utterance],
    output: Optional[str],
    args: argparse.Namespace
) -> None:
    if output:
        write_utterances(utterances, output)
    else:
        _emit(_frame_csv(utterances_to_frame(utterances)), args)


def cmd_probe(args: argparse.Namespace) -> int:
    config = _run_config(corpus_dir=args.corpus, patterns_file=args.patterns)
    segments = load_corpus(config.corpus_dir)
    hits = probe(segments, _patterns(args))
    _write_utterances_or_print(hits, args.output, args)
    return 0


def cmd_sample(args: argparse.Namespace) -> int:
    config = _run_config(
        patterns_file=args.patterns,
        cap=resolve_cap(args.cap),
        seed=resolve_seed(args.seed),
    )
    hits = read_utterances(args.matches)
    if args.pooled:
        selected = sample(hits, config.cap, config.seed)
    else:
        selected = sample_per_pattern(hits, config.cap, config.seed, _patterns(args))
    logger.info(f"Sampled {len(selected)} of {len(hits)} hits (cap={config.cap}, seed={config.seed})")
    _write_utterances_or_print(selected, args.output, args)
    return 0


def _prompt_overrides(
    candidates: Sequence[Utterance],
    overrides: Mapping[str, bool],
    patterns: Sequence[ProbePattern]
) -> Dict[str, bool]:
    """Ask y/n for each candidate; Enter keeps the heuristic verdict, q stops asking."""
    answers = dict(overrides)
    for u in candidates:
        verdict = filter_candidate(u, answers, patterns)
        suggestion = "keep" if verdict.keep else f"reject ({verdict.reject_reason.value})"
        print(f"\n{u.id}: {u.text}\n  filter says: {suggestion}", file=sys.stderr)
        try:
            answer = input("  keep? [y/n, Enter=accept, q=quit] ").strip().lower()
        except EOFError:
            break
        if answer == "q":
            break
        if answer in ("y", "n"):
            answers[u.id] = answer == "y"
    return answers


def cmd_filter(args: argparse.Namespace) -> int:
    config = _run_config(patterns_file=args.patterns, overrides_file=args.overrides)
    patterns = _patterns(args)
    candidates = read_utterances(args.sample)

    overrides: Dict[str, bool] = {}
    if config.overrides_file is not None and (config.overrides_file.is_file() or not args.prompt):
        overrides = load_overrides(config.overrides_file)
    if args.prompt:
        overrides = _prompt_overrides(candidates, overrides, patterns)
        if config.overrides_file is not None:
            save_overrides(overrides, config.overrides_file)

    results = apply_filter(candidates, overrides, patterns)
    if args.output:
        write_verdicts(results, args.output)
    else:
        _emit(_frame_csv(verdicts_to_frame(results)), args)
    return 0


def cmd_agree(args: argparse.Namespace) -> int:
    codings = load_codings(args.codings)
    explicit = bool(args.feature)
    reports = []
    for feature in args.feature or AGREEMENT_FEATURES:
        try:
            reports.append(agreement_report(codings, feature))
        except DegenerateMarginalsError as e:
            if explicit:
                raise
            logger.warning(f"Skipping {feature}: {e}")
    precision = get_settings().report_precision
    _emit(format_agreement_reports(reports, args.format, precision), args)
    return 0


def cmd_assoc(args: argparse.Namespace) -> int:
    codings = load_codings(args.codings)
    subset = agreement_subset(codings)
    if args.save_subset:
        save_agreed_subset(subset, args.save_subset, codings.roster)

    results = {}
    parts: List[str] = []
    for feature in args.feature or FUNCTION_FEATURES:
        table = build_contingency(subset, feature)
        results[feature] = chi_square_yates(table)
        if args.format == "text":
            parts.append(format_contingency(table) + "\n")
            parts.append(format_chi_square_results({feature: results[feature]}))

    if args.format == "csv":
        _emit(format_chi_square_results(results, "csv"), args)
    else:
        _emit("\n".join(parts), args)
    return 0


def _decision_table(tree) -> pd.DataFrame:
    rows = []
    for intentionality in Intentionality:
        for awareness in Awareness:
            prediction = predict(tree, intentionality, awareness)
            rows.append({
                "intentionality": intentionality.value,
                "awareness": awareness.value,
                "form": prediction.label.value,
                "confidence": prediction.confidence,
            })
    return pd.DataFrame(rows, columns=["intentionality", "awareness", "form", "confidence"])


def cmd_induce(args: argparse.Namespace) -> int:
    subset = agreement_subset(load_codings(args.codings))
    instances = training_instances(subset)
    tree = induce(instances)
    if args.output:
        save_tree(tree, args.output)

    if args.format == "csv":
        _emit(_frame_csv(_decision_table(tree)), args)
    else:
        precision = get_settings().report_precision
        accuracy = training_accuracy(tree, instances)
        _emit(
            describe_tree(tree)
            + f"training accuracy: {accuracy:.{precision}f} on {tree.training_size} examples\n",
            args,
        )
    return 0


def cmd_predict(args: argparse.Namespace) -> int:
    tree = load_tree(args.tree)
    prediction = predict(tree, args.intentionality, args.awareness)
    precision = get_settings().report_precision
    if args.format == "csv":
        frame = pd.DataFrame([{
            "intentionality": args.intentionality,
            "awareness": args.awareness,
            "form": prediction.label.value,
            "confidence": prediction.confidence,
        }])
        _emit(_frame_csv(frame), args)
    else:
        _emit(f"{prediction.label.value} confidence={prediction.confidence:.{precision}f}\n", args)
    return 0


def cmd_generate(args: argparse.Namespace) -> int:
    if args.tree:
        tree = load_tree(args.tree)
        sentence = plan_and_realize(
            tree, args.intentionality, args.awareness, args.action, args.variant, args.trailing
        )
    else:
        sentence = realize(make_request(args.form, args.action, args.variant, args.trailing))
    sys.stdout.write(sentence + "\n")
    return 0


def cmd_report(args: argparse.Namespace) -> int:
    config = _run_config(corpus_dir=args.corpus, patterns_file=args.patterns)
    patterns = _patterns(args)
    raw = read_utterances(args.matches)
    sampled = read_utterances(args.sample)
    kept_ids = read_kept_ids(args.verdicts)
    kept = [u for u in sampled if u.id in kept_ids]
    total = len(load_corpus(config.corpus_dir)) if config.corpus_dir else None
    report = stage_report(raw, sampled, kept, total, patterns)
    _emit(format_stage_report(report, args.format), args)
    return 0


def cmd_schema(args: argparse.Namespace) -> int:
    rows = describe_schema()
    if args.format == "csv":
        frame = pd.DataFrame(rows, columns=["feature", "value", "description"])
        _emit(_frame_csv(frame), args)
    else:
        _emit("".join(f"{feature} {value}: {description}\n" for feature, value, description in rows), args)
    return 0


def cmd_pipeline(args: argparse.Namespace) -> int:
    config = _run_config(
        corpus_dir=args.corpus,
        patterns_file=args.patterns,
        cap=resolve_cap(args.cap),
        seed=resolve_seed(args.seed),
        overrides_file=args.overrides,
        output_dir=args.output_dir,
        report_format=args.format,
    )
    report = ExtractionPipeline(config).run()
    _emit(format_stage_report(report, args.format), args)
    return 0


HANDLERS = {
    "probe": cmd_probe,
    "sample": cmd_sample,
    "filter": cmd_filter,
    "agree": cmd_agree,
    "assoc": cmd_assoc,
    "induce": cmd_induce,
    "predict": cmd_predict,
    "generate": cmd_generate,
    "report": cmd_report,
    "schema": cmd_schema,
    "pipeline": cmd_pipeline,
}


__all__ = ["HANDLERS", "AGREEMENT_FEATURES"]
