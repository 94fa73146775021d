"""Logging setup with rotation; reports go to stdout, log records never do."""

import json
import logging
import sys
from datetime import datetime, timezone
from logging.handlers import RotatingFileHandler
from pathlib import Path
from typing import Optional

from motivic_zeta.config import get_settings

ROOT_LOGGER = "motivic_zeta"


class JSONFormatter(logging.Formatter):
    """JSON log formatter."""

    def format(self, record: logging.LogRecord) -> str:
        log_data = {
            "timestamp": datetime.now(timezone.utc).isoformat(),
            "level": record.levelname,
            "logger": record.name,
            "message": record.getMessage(),
            "module": record.module,
            "function": record.funcName,
            "line": record.lineno,
        }

        if record.exc_info:
            log_data["exception"] = self.formatException(record.exc_info)

        for extra in ("model", "subcommand", "execution_time"):
            if hasattr(record, extra):
                log_data[extra] = getattr(record, extra)

        return json.dumps(log_data)


_initialized = False


def setup_logging(log_dir: Optional[Path] = None, console: bool = True) -> None:
    """Attach a rotating JSON file handler and a stderr console handler, once."""
    global _initialized

    if _initialized:
        return

    settings = get_settings()
    log_dir = log_dir or get_log_dir()
    log_dir.mkdir(parents=True, exist_ok=True)

    root_logger = logging.getLogger(ROOT_LOGGER)
    root_logger.setLevel(getattr(logging, settings.logging.level.upper()))

    log_file = log_dir / f"motivic_zeta_{datetime.now().strftime('%Y%m%d')}.log"
    file_handler = RotatingFileHandler(
        log_file,
        maxBytes=settings.logging.max_bytes,
        backupCount=settings.logging.backup_count,
    )
    if settings.logging.format == "json":
        file_handler.setFormatter(JSONFormatter())
    else:
        file_handler.setFormatter(
            logging.Formatter("%(asctime)s - %(name)s - %(levelname)s - %(message)s")
        )
    root_logger.addHandler(file_handler)

    # stdout is reserved for reports
    if console:
        console_handler = logging.StreamHandler(sys.stderr)
        console_handler.setLevel(getattr(logging, settings.logging.console_level.upper()))
        console_handler.setFormatter(logging.Formatter("%(levelname)s - %(name)s - %(message)s"))
        root_logger.addHandler(console_handler)

    _initialized = True


def get_logger(name: str) -> logging.Logger:
    """Get a logger below the package root."""
    setup_logging()
    return logging.getLogger(f"{ROOT_LOGGER}.{name}")


def get_log_dir() -> Path:
    """Log directory from settings."""
    return Path(get_settings().logging.dir)


def reset_logging():
    """Reset logging (for testing)."""
    global _initialized
    logger = logging.getLogger(ROOT_LOGGER)
    for handler in logger.handlers:
        handler.close()
    logger.handlers.clear()
    _initialized = False
