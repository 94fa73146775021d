"""JSON export of analysis reports with schema validation."""

import json
from pathlib import Path
from typing import Any, Dict, List

from jsonschema import Draft7Validator

from motivic_zeta.output.schemas import ENVELOPE_SCHEMA, REPORT_SCHEMAS, SCHEMA_VERSION


class ReportValidationError(Exception):
    """Raised when a report does not match its published schema."""
    pass


class ReportExporter:
    """
    Wrap reports in a versioned envelope and serialise them deterministically.

    Every report is validated against the schema of its subcommand before it
    is emitted; output never carries timestamps, so reruns are byte-identical.
    """

    def __init__(self, version: str = SCHEMA_VERSION):
        self.version = version
        self._envelope = Draft7Validator(ENVELOPE_SCHEMA)
        self._reports = {name: Draft7Validator(schema) for name, schema in REPORT_SCHEMAS.items()}

    def envelope(self, subcommand: str, source: str, report: Any) -> Dict[str, Any]:
        """
        Build and validate the envelope for one report.

        Args:
            subcommand: report kind, a key of REPORT_SCHEMAS
            source: input file or corpus name
            report: JSON-compatible report body

        Raises:
            ReportValidationError: If the envelope or the body violates its schema
        """
        data = {
            "schema_version": self.version,
            "subcommand": subcommand,
            "input": source,
            "report": report,
        }
        self.validate_report(data)
        return data

    def validate_report(self, data: Dict[str, Any]) -> None:
        problems = self.errors(data)
        if problems:
            raise ReportValidationError("; ".join(problems))

    def errors(self, data: Dict[str, Any]) -> List[str]:
        """Schema violations of an envelope, empty when valid."""
        problems = [f"envelope: {e.message}" for e in self._envelope.iter_errors(data)]
        validator = self._reports.get(data.get("subcommand"))
        if validator is not None:
            for e in validator.iter_errors(data.get("report")):
                where = "/".join(str(p) for p in e.absolute_path) or "<report>"
                problems.append(f"{where}: {e.message}")
        return problems

    def to_json(self, data: Any, indent: int = 2) -> str:
        return json.dumps(data, indent=indent, sort_keys=True, ensure_ascii=False)

    def export(self, data: Any, output_path: Path, indent: int = 2) -> None:
        """Write serialised data to a file, creating parent directories."""
        output_path.parent.mkdir(parents=True, exist_ok=True)
        output_path.write_text(self.to_json(data, indent=indent) + "\n", encoding="utf-8")
