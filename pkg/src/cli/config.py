"""
Per-run configuration for the command-line pipeline.
"""
from pathlib import Path
from typing import Literal, Optional

from pydantic import BaseModel, ConfigDict, Field

from src.utils.config import get_settings
from src.utils.errors import CorpusPathError
from src.utils.logger import get_logger

logger = get_logger(__name__)


class RunConfig(BaseModel):
    """Validated inputs shared by the pipeline subcommands."""

    model_config = ConfigDict(frozen=True)

    corpus_dir: Optional[Path] = None
    patterns_file: Optional[Path] = None
    cap: int = Field(default=100, ge=1)
    seed: int = 0
    overrides_file: Optional[Path] = None
    output_dir: Optional[Path] = None
    report_format: Literal["text", "csv"] = "text"

    def check_paths(self) -> "RunConfig":
        """
        Fail fast on missing inputs, before any stage runs.

        Raises:
            CorpusPathError: corpus directory or an input file does not exist
        """
        if self.corpus_dir is not None and not self.corpus_dir.is_dir():
            raise CorpusPathError(str(self.corpus_dir), "corpus directory not found")
        if self.patterns_file is not None and not self.patterns_file.is_file():
            raise CorpusPathError(str(self.patterns_file), "pattern file not found")
        # An overrides file may be created by --prompt; its parent must exist
        if self.overrides_file is not None and not self.overrides_file.parent.is_dir():
            raise CorpusPathError(str(self.overrides_file.parent), "overrides directory not found")
        return self


def resolve_seed(cli_seed: Optional[int]) -> int:
    """PREVENTKIT_SEED wins over ``--seed``; both unset means 0."""
    env_seed = get_settings().seed
    if env_seed is not None:
        if cli_seed is not None and cli_seed != env_seed:
            logger.info(f"PREVENTKIT_SEED={env_seed} overrides --seed {cli_seed}")
        return env_seed
    return cli_seed if cli_seed is not None else 0


def resolve_cap(cli_cap: Optional[int]) -> int:
    return cli_cap if cli_cap is not None else get_settings().sample_cap


__all__ = ["RunConfig", "resolve_seed", "resolve_cap"]
