"""Report output: schemas, JSON export and rich text display."""

from motivic_zeta.output.cli_display import CLIDisplay
from motivic_zeta.output.json_export import ReportExporter, ReportValidationError
from motivic_zeta.output.schemas import REPORT_SCHEMAS, SCHEMA_VERSION

__all__ = ["CLIDisplay", "REPORT_SCHEMAS", "ReportExporter", "ReportValidationError", "SCHEMA_VERSION"]
