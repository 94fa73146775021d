"""JSON ingestion of abelian-variety inputs."""

from __future__ import annotations

import logging
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, Union

from jsonschema import Draft7Validator

from motivic_zeta.abelian.models import (
    AbelianInputError,
    AbelianOracleTable,
    OracleRow,
    SemiAbelianInput,
)
from motivic_zeta.output.schemas import ABELIAN_SCHEMA
from motivic_zeta.sncmodel.loader import read_json
from motivic_zeta.sncmodel.models import ModelParseError
from motivic_zeta.vpoly import ClassParseError, MotClass, parse_class

logger = logging.getLogger(__name__)

_VALIDATOR = Draft7Validator(ABELIAN_SCHEMA)

AbelianInput = Union[SemiAbelianInput, AbelianOracleTable]


def _class(text: str, where: str) -> MotClass:
    try:
        return parse_class(text)
    except ClassParseError as e:
        raise AbelianInputError(f"{where}: {e}") from e


def abelian_from_dict(data: Dict[str, Any]) -> AbelianInput:
    """
    Build a semi-abelian input or an oracle table from its JSON object.

    Raises:
        AbelianInputError: On schema violations or malformed class expressions
    """
    errors = list(_VALIDATOR.iter_errors(data))
    if errors:
        mode = data.get("mode") if isinstance(data, dict) else None
        raise AbelianInputError(
            f"abelian input (mode={mode!r}) does not match the schema: "
            + "; ".join(sorted(e.message for e in errors))
        )
    if data["mode"] == "semiabelian":
        return SemiAbelianInput(
            class0=_class(data["class"], "class"),
            t=data["t"],
            ord=data["ord"],
            shift=data.get("shift", 0),
        )
    rows = {
        int(d): OracleRow(
            cls=_class(row["class"], f"rows/{d}/class"),
            ord=Fraction(row["ord"]),
            t=row["t"],
        )
        for d, row in data["rows"].items()
    }
    return AbelianOracleTable(
        e=data["e"],
        c=Fraction(data["c"]),
        t_pot=data["t_pot"],
        rows=rows,
        depth=data.get("depth"),
    )


def load_abelian(path: Union[str, Path]) -> AbelianInput:
    """Load an abelian input file."""
    try:
        data = read_json(path)
    except ModelParseError as e:
        raise AbelianInputError(str(e)) from e
    result = abelian_from_dict(data)
    logger.info(f"Loaded {data['mode']} abelian input from {path}")
    return result
