"""
Command-line interface wiring the pipeline stages.
"""
from src.cli.config import RunConfig, resolve_seed, resolve_cap
from src.cli.pipeline import ExtractionPipeline
from src.cli.main import build_parser, run_subcommand, main

__all__ = [
    "RunConfig",
    "resolve_seed",
    "resolve_cap",
    "ExtractionPipeline",
    "build_parser",
    "run_subcommand",
    "main",
]
