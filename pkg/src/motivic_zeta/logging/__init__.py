"""Logging setup and utilities."""

from .setup import JSONFormatter, get_log_dir, get_logger, reset_logging, setup_logging

__all__ = ["JSONFormatter", "setup_logging", "get_logger", "get_log_dir", "reset_logging"]
