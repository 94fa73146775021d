"""Configuration settings management."""

import os
from pathlib import Path
from dataclasses import dataclass, field
from typing import Optional
import yaml

CONFIG_ENV_VAR = "MOTIVIC_ZETA_CONFIG_PATH"
CORPUS_ENV_VAR = "MOTIVIC_ZETA_CORPUS_DIR"


@dataclass
class LoggingConfig:
    max_bytes: int = 10485760  # 10 MB
    backup_count: int = 5
    level: str = "INFO"
    format: str = "json"
    dir: str = "logs"
    console_level: str = "WARNING"


@dataclass
class AnalysisConfig:
    series_depth: int = 10
    output_format: str = "text"
    kodaira_n: int = 3


@dataclass
class BatchConfig:
    workers: int = 4
    timeout_seconds: int = 120


@dataclass
class CorpusConfig:
    dir: Optional[str] = None


@dataclass
class Settings:
    logging: LoggingConfig = field(default_factory=LoggingConfig)
    analysis: AnalysisConfig = field(default_factory=AnalysisConfig)
    batch: BatchConfig = field(default_factory=BatchConfig)
    corpus: CorpusConfig = field(default_factory=CorpusConfig)

    @classmethod
    def from_yaml(cls, path: Path) -> "Settings":
        """Load settings from YAML file."""
        if not path.exists():
            return cls()

        with open(path) as f:
            data = yaml.safe_load(f) or {}

        return cls(
            logging=LoggingConfig(**data.get("logging", {})),
            analysis=AnalysisConfig(**data.get("analysis", {})),
            batch=BatchConfig(**data.get("batch", {})),
            corpus=CorpusConfig(**data.get("corpus", {})),
        )

    def corpus_dir(self) -> Optional[Path]:
        """Corpus override: environment first, then the settings file."""
        override = os.environ.get(CORPUS_ENV_VAR) or self.corpus.dir
        return Path(override) if override else None


_settings: Optional[Settings] = None


def get_settings(config_path: Optional[Path] = None) -> Settings:
    """Get or create settings singleton."""
    global _settings

    if _settings is None:
        path = config_path or Path(os.environ.get(CONFIG_ENV_VAR, "config/settings.yaml"))
        _settings = Settings.from_yaml(path)

    return _settings


def reset_settings():
    """Reset settings (for testing)."""
    global _settings
    _settings = None
