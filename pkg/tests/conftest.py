"""
Shared fixtures for the PreventKit test suite.
"""
from pathlib import Path

import pytest

from src.annotation import agreement_subset, load_codings
from src.induction import induce, training_instances
from src.utils.config import reload_settings

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


@pytest.fixture(autouse=True)
def clean_settings(monkeypatch, tmp_path):
    """Isolate every test from PREVENTKIT_* variables and any local .env file."""
    import os

    for name in list(os.environ):
        if name.upper().startswith("PREVENTKIT_"):
            monkeypatch.delenv(name, raising=False)
    monkeypatch.chdir(tmp_path)
    reload_settings()
    yield
    reload_settings()


@pytest.fixture
def fixtures_dir() -> Path:
    return FIXTURES


@pytest.fixture
def corpus_dir() -> Path:
    return FIXTURES / "corpus"


@pytest.fixture(scope="session")
def codings239():
    return load_codings(FIXTURES / "codings239.csv")


@pytest.fixture(scope="session")
def agreed165(codings239):
    return agreement_subset(codings239)


@pytest.fixture(scope="session")
def fixture_instances(agreed165):
    return training_instances(agreed165)


@pytest.fixture(scope="session")
def fixture_tree(fixture_instances):
    return induce(fixture_instances)
