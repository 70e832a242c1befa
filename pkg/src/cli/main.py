"""
Command-line entry point: ``python -m src.cli <subcommand> ...``.

Exit status: 0 on success, 1 on validation or data errors (one-line
diagnostic on stderr), 2 on usage errors.
"""
import argparse
import sys
from typing import List, Optional, Sequence

from src import __version__
from src.annotation.schema import FEATURES, FUNCTION_FEATURES, Awareness, FormClass, Intentionality
from src.cli.commands import HANDLERS
from src.realizer import Variant
from src.utils.config import reload_settings
from src.utils.errors import PreventKitError
from src.utils.logger import get_logger, set_level

logger = get_logger(__name__)

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_USAGE = 2

LOG_LEVELS = ["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"]


def _common_options() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["text", "csv"], default="text",
                        help="Report format (default: text)")
    common.add_argument("--log-level", choices=LOG_LEVELS, type=str.upper, default=None,
                        help="Logging level for diagnostics on stderr")
    common.add_argument("--stamp", action="store_true",
                        help="Prefix reports with a generation timestamp line")
    return common


def _add_pattern_option(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--patterns", help="Pattern CSV (id,surface,family); built-in table if omitted")


def _add_sampling_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--cap", type=int, default=None, help="Sample cap per pattern (default: 100)")
    parser.add_argument("--seed", type=int, default=None,
                        help="Sampling seed (default: 0; PREVENTKIT_SEED overrides)")


def build_parser() -> argparse.ArgumentParser:
    """Create the argument parser with every subcommand."""
    common = _common_options()
    parser = argparse.ArgumentParser(
        prog="preventkit",
        description="Corpus study toolkit for preventative expressions.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", metavar="SUBCOMMAND")
    sub.required = True

    p = sub.add_parser("probe", parents=[common], help="Find utterances matching the probe patterns")
    p.add_argument("--corpus", required=True, help="Directory of UTF-8 .txt files")
    p.add_argument("--output", help="Matches CSV (stdout if omitted)")
    _add_pattern_option(p)

    p = sub.add_parser("sample", parents=[common], help="Seeded sample of probe hits")
    p.add_argument("--matches", required=True, help="Matches CSV from probe")
    p.add_argument("--output", help="Sample CSV (stdout if omitted)")
    p.add_argument("--pooled", action="store_true",
                   help="Cap the whole hit list instead of each pattern separately")
    _add_sampling_options(p)
    _add_pattern_option(p)

    p = sub.add_parser("filter", parents=[common], help="Keep negative imperatives and classify their form")
    p.add_argument("--sample", required=True, help="Sample CSV")
    p.add_argument("--overrides", help="Overrides CSV (id,keep); written back with --prompt")
    p.add_argument("--prompt", action="store_true", help="Ask keep/reject for every candidate")
    p.add_argument("--output", help="Verdicts CSV (stdout if omitted)")
    _add_pattern_option(p)

    p = sub.add_parser("agree", parents=[common], help="Inter-coder agreement (K) per feature")
    p.add_argument("--codings", required=True, help="Coding CSV")
    p.add_argument("--feature", action="append", choices=list(FEATURES),
                   help="Feature to report (repeatable; default: all)")

    p = sub.add_parser("assoc", parents=[common], help="Chi-square association of a feature with form")
    p.add_argument("--codings", required=True, help="Coding CSV")
    p.add_argument("--feature", action="append", choices=list(FUNCTION_FEATURES),
                   help="Function feature (repeatable; default: both)")
    p.add_argument("--save-subset", help="Write the agreed subset as a coding CSV")

    p = sub.add_parser("induce", parents=[common], help="Learn the feature-to-form decision tree")
    p.add_argument("--codings", required=True, help="Coding CSV")
    p.add_argument("--output", help="Tree file to write")

    p = sub.add_parser("predict", parents=[common], help="Predict the form for a feature pair")
    p.add_argument("--tree", required=True, help="Tree file")
    p.add_argument("--intentionality", required=True, choices=list(Intentionality.__members__))
    p.add_argument("--awareness", required=True, choices=list(Awareness.__members__))

    p = sub.add_parser("generate", parents=[common], help="Realize a preventative expression")
    p.add_argument("--action", required=True, help="Negated action, base-form verb phrase")
    p.add_argument("--trailing", help="Purpose or reason clause appended to the sentence")
    p.add_argument("--variant", choices=list(Variant.__members__))
    p.add_argument("--form", choices=list(FormClass.__members__))
    p.add_argument("--tree", help="Tree file; chooses the form from the two features")
    p.add_argument("--intentionality", choices=list(Intentionality.__members__))
    p.add_argument("--awareness", choices=list(Awareness.__members__))

    p = sub.add_parser("report", parents=[common], help="Per-pattern counts across the extraction stages")
    p.add_argument("--matches", required=True, help="Matches CSV from probe")
    p.add_argument("--sample", required=True, help="Sample CSV")
    p.add_argument("--verdicts", required=True, help="Verdicts CSV from filter")
    p.add_argument("--corpus", help="Corpus directory, for the probed-segment share")
    _add_pattern_option(p)

    sub.add_parser("schema", parents=[common], help="Print the coding manual")

    p = sub.add_parser("pipeline", parents=[common], help="probe, sample, filter and report in one run")
    p.add_argument("--corpus", required=True, help="Directory of UTF-8 .txt files")
    p.add_argument("--output-dir", required=True, help="Directory for the stage artifacts")
    p.add_argument("--overrides", help="Overrides CSV (id,keep)")
    _add_sampling_options(p)
    _add_pattern_option(p)

    return parser


def _check_generate(parser: argparse.ArgumentParser, args: argparse.Namespace) -> None:
    if args.tree:
        if not (args.intentionality and args.awareness):
            parser.error("generate --tree needs --intentionality and --awareness")
    elif not args.form:
        parser.error("generate needs --form, or --tree with --intentionality and --awareness")


def run_subcommand(argv: Optional[Sequence[str]] = None) -> int:
    """
    Parse ``argv`` and run one subcommand.

    Returns:
        Exit status (0 success, 1 toolkit error, 2 usage error)
    """
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv) if argv is not None else None)
        if args.command == "generate":
            _check_generate(parser, args)
    except SystemExit as e:
        return EXIT_OK if e.code in (0, None) else EXIT_USAGE

    settings = reload_settings()
    set_level(args.log_level or settings.log_level)

    try:
        return HANDLERS[args.command](args)
    except PreventKitError as e:
        logger.debug(f"{args.command} failed", exc_info=True)
        print(f"preventkit {args.command}: error: {e}", file=sys.stderr)
        return EXIT_ERROR


def main(argv: Optional[List[str]] = None) -> None:
    sys.exit(run_subcommand(argv))


if __name__ == "__main__":
    main()
