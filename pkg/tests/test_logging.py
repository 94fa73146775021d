"""Tests for logging system."""

import json
import logging

from motivic_zeta.logging import get_log_dir, get_logger, setup_logging
from motivic_zeta.logging.setup import JSONFormatter, reset_logging


def make_record(msg: str = "Test message") -> logging.LogRecord:
    return logging.LogRecord(
        name="test",
        level=logging.INFO,
        pathname="test.py",
        lineno=1,
        msg=msg,
        args=(),
        exc_info=None,
    )


class TestLogging:
    def setup_method(self):
        reset_logging()

    def teardown_method(self):
        reset_logging()

    def test_get_logger(self, isolated_settings):
        logger = get_logger("test")
        assert logger.name == "motivic_zeta.test"

    def test_json_formatter(self):
        data = json.loads(JSONFormatter().format(make_record()))
        assert data["message"] == "Test message"
        assert data["level"] == "INFO"
        assert "timestamp" in data

    def test_log_rotation_setup(self, isolated_settings, tmp_path):
        setup_logging(log_dir=tmp_path, console=False)
        get_logger("rotation_test").info("Test message")

        log_files = list(tmp_path.glob("motivic_zeta_*.log"))
        assert len(log_files) == 1
        record = json.loads(log_files[0].read_text().splitlines()[0])
        assert record["logger"] == "motivic_zeta.rotation_test"

    def test_custom_fields(self):
        record = make_record("Test")
        record.model = "quartic_k3"
        record.subcommand = "poles"
        record.execution_time = 0.25

        data = json.loads(JSONFormatter().format(record))
        assert data["model"] == "quartic_k3"
        assert data["subcommand"] == "poles"
        assert data["execution_time"] == 0.25

    def test_unknown_extras_ignored(self):
        record = make_record()
        record.agent = "x"
        assert "agent" not in json.loads(JSONFormatter().format(record))

    def test_log_dir_from_settings(self, isolated_settings):
        assert get_log_dir() == isolated_settings.parent / "logs"

    def test_console_goes_to_stderr(self, isolated_settings, capsys):
        setup_logging()
        get_logger("console").warning("visible warning")
        captured = capsys.readouterr()
        assert "visible warning" in captured.err
        assert captured.out == ""

    def test_setup_is_idempotent(self, isolated_settings, tmp_path):
        setup_logging(log_dir=tmp_path, console=False)
        setup_logging(log_dir=tmp_path, console=False)
        assert len(logging.getLogger("motivic_zeta").handlers) == 1
