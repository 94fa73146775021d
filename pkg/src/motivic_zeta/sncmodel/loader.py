"""JSON ingestion of snc-model data."""

from __future__ import annotations

import json
import logging
from collections import Counter
from pathlib import Path
from typing import Any, Dict, Optional, Union

from jsonschema import Draft7Validator

from motivic_zeta.output.schemas import GENERATOR_SCHEMA, MODEL_SCHEMA
from motivic_zeta.sncmodel.models import Component, ModelParseError, SncModelData, StratumPiece
from motivic_zeta.vpoly import ClassParseError, parse_class

logger = logging.getLogger(__name__)

_MODEL_VALIDATOR = Draft7Validator(MODEL_SCHEMA)
_GENERATOR_VALIDATOR = Draft7Validator(GENERATOR_SCHEMA)


def _schema_errors(validator: Draft7Validator, data: Any) -> list[str]:
    errors = sorted(validator.iter_errors(data), key=lambda e: [str(p) for p in e.absolute_path])
    messages = []
    for error in errors:
        where = "/".join(str(p) for p in error.absolute_path) or "<root>"
        messages.append(f"{where}: {error.message}")
    return messages


def model_from_dict(data: Dict[str, Any], n: Optional[int] = None) -> SncModelData:
    """
    Build a model from its JSON object.

    Generator stubs ({"generator": "kodaira_In", "n": 3}) are expanded; `n`
    overrides the stub's parameter.

    Raises:
        ModelParseError: On schema violations or malformed class expressions
    """
    if isinstance(data, dict) and "generator" in data:
        messages = _schema_errors(_GENERATOR_VALIDATOR, data)
        if messages:
            raise ModelParseError("; ".join(messages))
        from motivic_zeta.corpus.generators import generate

        return generate(data["generator"], n if n is not None else data.get("n"))

    messages = _schema_errors(_MODEL_VALIDATOR, data)
    if messages:
        raise ModelParseError("; ".join(messages))

    components = tuple(Component(c["id"], c["N"], c["nu"]) for c in data["components"])
    pieces = []
    for p in data["pieces"]:
        try:
            tilde = parse_class(p["tilde_class"])
        except ClassParseError as e:
            raise ModelParseError(f"piece {p['id']}: tilde_class: {e}") from e
        pieces.append(
            StratumPiece(
                id=p["id"],
                J=frozenset(p["J"]),
                repeated=tuple(sorted(j for j, k in Counter(p["J"]).items() if k > 1)),
                tilde_class=tilde,
                facets=p.get("facets"),
            )
        )
    return SncModelData(
        name=data["name"], dim=data["dim"], components=components, pieces=tuple(pieces)
    )


def read_json(path: Union[str, Path]) -> Any:
    """
    Read a JSON document, reporting decode errors with line and column.

    Raises:
        ModelParseError: If the file is missing or not valid JSON
    """
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as e:
        raise ModelParseError(f"cannot read {path}: {e.strerror}") from e
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise ModelParseError(
            f"{path.name}: invalid JSON at line {e.lineno}, column {e.colno} "
            f"(position {e.pos}): {e.msg}"
        ) from e


def load_model(path: Union[str, Path], n: Optional[int] = None) -> SncModelData:
    """Load a model file (or generator stub) from disk."""
    data = read_json(path)
    model = model_from_dict(data, n=n)
    logger.info(f"Loaded model {model.name} from {path}")
    return model


def model_to_dict(model: SncModelData) -> Dict[str, Any]:
    """Serialize a model back to the input schema."""
    pieces = []
    for p in model.pieces:
        entry: Dict[str, Any] = {
            "id": p.id,
            "J": list(p.ordered_J()),
            "tilde_class": p.tilde_class.render(),
        }
        if p.facets is not None and p.size >= 2:
            entry["facets"] = p.facet_map()
        pieces.append(entry)
    return {
        "name": model.name,
        "dim": model.dim,
        "components": [{"id": c.id, "N": c.N, "nu": c.nu} for c in model.components],
        "pieces": pieces,
    }
