"""Tests for configuration management."""

from pathlib import Path

from motivic_zeta.config import Settings, get_settings
from motivic_zeta.config.settings import CORPUS_ENV_VAR, reset_settings


class TestSettings:
    def setup_method(self):
        reset_settings()

    def test_default_settings(self):
        settings = Settings()
        assert settings.logging.max_bytes == 10485760
        assert settings.logging.console_level == "WARNING"
        assert settings.analysis.series_depth == 10
        assert settings.analysis.kodaira_n == 3
        assert settings.batch.workers == 4
        assert settings.corpus.dir is None

    def test_load_from_yaml(self, config_path):
        settings = Settings.from_yaml(config_path)
        assert settings.logging.level == "DEBUG"
        assert settings.logging.max_bytes == 1048576
        assert settings.analysis.series_depth == 6
        assert settings.batch.timeout_seconds == 60

    def test_missing_yaml_returns_defaults(self, tmp_path):
        settings = Settings.from_yaml(tmp_path / "nonexistent.yaml")
        assert settings.logging.max_bytes == 10485760

    def test_empty_yaml_returns_defaults(self, tmp_path):
        path = tmp_path / "empty.yaml"
        path.write_text("")
        assert Settings.from_yaml(path).analysis.series_depth == 10

    def test_get_settings_singleton(self):
        s1 = get_settings()
        s2 = get_settings()
        assert s1 is s2

    def test_env_var_selects_file(self, isolated_settings):
        assert get_settings().analysis.kodaira_n == 4

    def test_bundled_settings_file(self):
        path = Path(__file__).parent.parent / "config" / "settings.yaml"
        assert Settings.from_yaml(path) == Settings()


class TestCorpusDir:
    def setup_method(self):
        reset_settings()

    def test_no_override(self, monkeypatch):
        monkeypatch.delenv(CORPUS_ENV_VAR, raising=False)
        assert Settings().corpus_dir() is None

    def test_settings_override(self, monkeypatch, tmp_path):
        monkeypatch.delenv(CORPUS_ENV_VAR, raising=False)
        settings = Settings()
        settings.corpus.dir = str(tmp_path)
        assert settings.corpus_dir() == tmp_path

    def test_env_wins(self, monkeypatch, tmp_path):
        monkeypatch.setenv(CORPUS_ENV_VAR, str(tmp_path / "env"))
        settings = Settings()
        settings.corpus.dir = str(tmp_path / "file")
        assert settings.corpus_dir() == tmp_path / "env"
