"""Pytest configuration and fixtures."""

import pytest

from motivic_zeta.config.settings import CONFIG_ENV_VAR, CORPUS_ENV_VAR, reset_settings
from motivic_zeta.corpus import BUNDLED_DIR, generate, list_corpus, load_corpus_model
from motivic_zeta.logging import reset_logging


@pytest.fixture
def config_path(tmp_path):
    """Temporary config file."""
    config = tmp_path / "settings.yaml"
    config.write_text(
        f"""
logging:
  max_bytes: 1048576
  backup_count: 3
  level: DEBUG
  dir: {tmp_path / "logs"}
analysis:
  series_depth: 6
  kodaira_n: 4
batch:
  workers: 2
  timeout_seconds: 60
"""
    )
    return config


@pytest.fixture
def isolated_settings(config_path, monkeypatch):
    """Point the settings singleton at the temporary config and the bundled corpus."""
    monkeypatch.setenv(CONFIG_ENV_VAR, str(config_path))
    monkeypatch.delenv(CORPUS_ENV_VAR, raising=False)
    reset_settings()
    reset_logging()
    yield config_path
    reset_logging()
    reset_settings()


@pytest.fixture
def quartic_k3():
    return load_corpus_model("quartic_k3")


@pytest.fixture
def octahedron():
    return load_corpus_model("octahedron_typeIII")


@pytest.fixture
def type_ii_chain():
    return load_corpus_model("typeII_chain")


@pytest.fixture
def trivial_smooth():
    return load_corpus_model("trivial_smooth")


@pytest.fixture
def kodaira_I():
    """Factory for the Neron n-gon models."""
    return lambda n: generate("kodaira_In", n)


@pytest.fixture
def corpus_models():
    """Every snc-model of the bundled corpus (generator stubs at their default n)."""
    return [load_corpus_model(p.stem, n=3) for p in list_corpus("model")]


@pytest.fixture
def bundled_dir():
    return BUNDLED_DIR
