"""
Tests for settings loading, run configuration and logging setup.
"""
import logging

import pytest

from src.cli import ExtractionPipeline, RunConfig, resolve_cap, resolve_seed
from src.utils.config import get_settings, reload_settings
from src.utils.errors import CorpusPathError, InvalidArgumentError
from src.utils.logger import LoggerMixin, set_level, setup_logger


def test_defaults():
    settings = get_settings()
    assert settings.seed is None
    assert settings.sample_cap == 100
    assert settings.negation_window == 10
    assert settings.report_precision == 3
    assert settings.log_level == "WARNING"


def test_environment_prefix(monkeypatch):
    monkeypatch.setenv("PREVENTKIT_SAMPLE_CAP", "25")
    monkeypatch.setenv("PREVENTKIT_WORKERS", "2")
    assert get_settings().sample_cap == 100
    settings = reload_settings()
    assert settings.sample_cap == 25
    assert settings.workers == 2
    assert get_settings() is settings


def test_dotenv_file(tmp_path):
    (tmp_path / ".env").write_text("PREVENTKIT_SEED=11\n", encoding="utf-8")
    assert reload_settings().seed == 11


def test_seed_precedence(monkeypatch):
    assert resolve_seed(None) == 0
    assert resolve_seed(5) == 5
    monkeypatch.setenv("PREVENTKIT_SEED", "9")
    reload_settings()
    assert resolve_seed(5) == 9
    assert resolve_seed(None) == 9


def test_cap_falls_back_to_settings(monkeypatch):
    assert resolve_cap(7) == 7
    monkeypatch.setenv("PREVENTKIT_SAMPLE_CAP", "40")
    reload_settings()
    assert resolve_cap(None) == 40


def test_run_config_path_checks(tmp_path, corpus_dir):
    assert RunConfig(corpus_dir=corpus_dir).check_paths().corpus_dir == corpus_dir
    with pytest.raises(CorpusPathError):
        RunConfig(corpus_dir=tmp_path / "absent").check_paths()
    with pytest.raises(CorpusPathError):
        RunConfig(patterns_file=tmp_path / "patterns.csv").check_paths()
    with pytest.raises(CorpusPathError):
        RunConfig(overrides_file=tmp_path / "missing" / "overrides.csv").check_paths()


def test_pipeline_needs_a_corpus():
    with pytest.raises(InvalidArgumentError):
        ExtractionPipeline(RunConfig())


def test_pipeline_without_output_dir_writes_nothing(tmp_path, corpus_dir):
    report = ExtractionPipeline(RunConfig(corpus_dir=corpus_dir)).run()
    assert report.total_segments == 13
    assert list(tmp_path.iterdir()) == []


def test_console_handler_writes_to_stderr(capsys):
    logger = setup_logger("src.tests.console", level="INFO")
    logger.info("sampled 3 hits")
    captured = capsys.readouterr()
    assert captured.out == ""
    assert "sampled 3 hits" in captured.err


def test_log_file(tmp_path):
    log_file = tmp_path / "logs" / "run.log"
    logger = setup_logger("src.tests.file", level="ERROR", log_file=str(log_file), enable_console=False)
    logger.debug("not recorded")
    logger.error("kept 7 of 9")
    for handler in logger.handlers:
        handler.flush()
    text = log_file.read_text(encoding="utf-8")
    assert "kept 7 of 9" in text
    assert "not recorded" not in text


def test_set_level_updates_existing_loggers():
    logger = setup_logger("src.tests.levels", level="WARNING", enable_console=False)
    set_level("debug")
    assert logger.level == logging.DEBUG
    set_level("WARNING")
    assert logger.level == logging.WARNING


def test_logger_mixin_names_the_class():
    class Worker(LoggerMixin):
        pass

    worker = Worker()
    assert worker.logger.name == "src.Worker"
    assert worker.logger is worker.logger
