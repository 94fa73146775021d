"""Versioned JSON schemas for model input, abelian input and reports."""

SCHEMA_VERSION = "1"
_BASE = "https://motivic-zeta.invalid/schemas/v1"

_RATIONAL = {"type": "string", "pattern": r"^-?[0-9]+(/[0-9]+)?$"}
_CLASS = {"type": "string", "minLength": 1}

MODEL_SCHEMA = {
    "$schema": "http://json-schema.org/draft-07/schema#",
    "$id": f"{_BASE}/model.json",
    "title": "SncModelData",
    "type": "object",
    "required": ["name", "dim", "components", "pieces"],
    "additionalProperties": False,
    "properties": {
        "name": {"type": "string"},
        "description": {"type": "string"},
        "dim": {"type": "integer"},
        "components": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["id", "N", "nu"],
                "additionalProperties": False,
                "properties": {
                    "id": {"type": "string"},
                    "N": {"type": "integer"},
                    "nu": {"type": "integer"},
                },
            },
        },
        "pieces": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["id", "J", "tilde_class"],
                "additionalProperties": False,
                "properties": {
                    "id": {"type": "string"},
                    "J": {"type": "array", "items": {"type": "string"}},
                    "tilde_class": _CLASS,
                    "facets": {"type": "object", "additionalProperties": {"type": "string"}},
                },
            },
        },
    },
}

GENERATOR_SCHEMA = {
    "$schema": "http://json-schema.org/draft-07/schema#",
    "$id": f"{_BASE}/generator.json",
    "title": "ModelGenerator",
    "type": "object",
    "required": ["generator"],
    "additionalProperties": False,
    "properties": {
        "generator": {"type": "string", "enum": ["kodaira_In"]},
        "n": {"type": "integer", "minimum": 2},
        "description": {"type": "string"},
    },
}

ABELIAN_SCHEMA = {
    "$schema": "http://json-schema.org/draft-07/schema#",
    "$id": f"{_BASE}/abelian.json",
    "title": "AbelianInput",
    "oneOf": [
        {
            "type": "object",
            "required": ["mode", "class", "t", "ord"],
            "additionalProperties": False,
            "properties": {
                "mode": {"const": "semiabelian"},
                "class": _CLASS,
                "t": {"type": "integer", "minimum": 0},
                "ord": {"type": "integer"},
                "shift": {"type": "integer"},
            },
        },
        {
            "type": "object",
            "required": ["mode", "e", "c", "t_pot", "rows"],
            "additionalProperties": False,
            "properties": {
                "mode": {"const": "table"},
                "e": {"type": "integer", "minimum": 1},
                "c": _RATIONAL,
                "t_pot": {"type": "integer", "minimum": 0},
                "depth": {"type": "integer", "minimum": 1},
                "rows": {
                    "type": "object",
                    "patternProperties": {
                        "^[1-9][0-9]*$": {
                            "type": "object",
                            "required": ["class", "ord", "t"],
                            "additionalProperties": False,
                            "properties": {
                                "class": _CLASS,
                                "ord": {"oneOf": [{"type": "integer"}, _RATIONAL]},
                                "t": {"type": "integer", "minimum": 0},
                            },
                        }
                    },
                    "additionalProperties": False,
                },
            },
        },
    ],
}

POLE_REPORT_SCHEMA = {
    "$id": f"{_BASE}/pole_report.json",
    "type": "array",
    "items": {
        "type": "object",
        "required": ["q", "upper", "lower", "certified"],
        "additionalProperties": False,
        "properties": {
            "q": _RATIONAL,
            "upper": {"type": "integer", "minimum": 0},
            "lower": {"type": "integer", "minimum": 0},
            "certified": {"type": "boolean"},
        },
    },
}

MP_REPORT_SCHEMA = {
    "$id": f"{_BASE}/mp_report.json",
    "type": "object",
    "required": ["poles", "verdict", "predictions"],
    "additionalProperties": False,
    "properties": {
        "poles": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["q", "m", "c_m", "status"],
                "additionalProperties": False,
                "properties": {
                    "q": _RATIONAL,
                    "m": {"type": "integer", "minimum": 1},
                    "c_m": {"type": "integer"},
                    "status": {"enum": ["certified", "inconclusive"]},
                },
            },
        },
        "verdict": {"enum": ["certified", "inconclusive"]},
        "predictions": {
            "type": "object",
            "required": ["min_weight", "eigenvalue", "jordan_block_at_least"],
            "additionalProperties": False,
            "properties": {
                "min_weight": _RATIONAL,
                "eigenvalue": {"type": "string"},
                "jordan_block_at_least": {"type": "integer", "minimum": 1},
            },
        },
        "equivariant_kulikov_possible": {"type": ["boolean", "null"]},
    },
}

_INT_MAP = {"type": "object", "additionalProperties": {"type": "integer"}}

REPORT_SCHEMAS = {
    "zeta": {
        "type": "object",
        "required": ["normal_form", "numerator", "denominator", "poles"],
        "properties": {
            "normal_form": {"type": "string"},
            "numerator": {
                "type": "array",
                "items": {
                    "type": "object",
                    "required": ["tpow", "coeff"],
                    "properties": {"tpow": {"type": "integer"}, "coeff": _CLASS},
                },
            },
            "denominator": {
                "type": "array",
                "items": {
                    "type": "object",
                    "required": ["a", "b", "m"],
                    "properties": {
                        "a": {"type": "integer"},
                        "b": {"type": "integer", "minimum": 1},
                        "m": {"type": "integer", "minimum": 1},
                    },
                },
            },
            "poles": _INT_MAP,
        },
    },
    "series": {
        "type": "object",
        "required": ["depth", "coefficients"],
        "properties": {
            "depth": {"type": "integer", "minimum": 1},
            "coefficients": {"type": "array", "items": _CLASS},
        },
    },
    "poles": POLE_REPORT_SCHEMA,
    "skeleton": {
        "type": "object",
        "required": ["vertices", "faces", "delta", "min_weight", "largest_pole", "weights"],
        "properties": {
            "vertices": {"type": "array", "items": {"type": "string"}},
            "faces": {"type": "array"},
            "delta": {"type": "integer", "minimum": 0},
            "min_weight": _RATIONAL,
            "largest_pole": _RATIONAL,
            "weights": {"type": "object", "additionalProperties": _RATIONAL},
            "kulikov_type": {"type": ["string", "null"]},
        },
    },
    "topology": {
        "type": "object",
        "required": ["betti", "skeleton_betti", "pseudo_manifold"],
        "properties": {
            "betti": {"type": "array", "items": {"type": "integer", "minimum": 0}},
            "skeleton_betti": {"type": "array", "items": {"type": "integer", "minimum": 0}},
            "pseudo_manifold": {
                "type": "object",
                "required": ["connected", "pure", "max_two_cofaces", "closed", "boundary"],
            },
        },
    },
    "monodromy": {
        "type": "object",
        "required": ["acampo", "cyclotomic", "certified_eigenvalues", "degree", "nearby_euler"],
        "properties": {
            "acampo": _INT_MAP,
            "cyclotomic": _INT_MAP,
            "certified_eigenvalues": {"type": "array", "items": {"type": "integer"}},
            "degree": {"type": "integer"},
            "nearby_euler": {"type": "integer"},
            "euler_open_strata": _INT_MAP,
        },
    },
    "check-mp": MP_REPORT_SCHEMA,
    "blowup": {
        "type": "object",
        "required": ["piece", "new_component", "model", "zeta_unchanged"],
        "properties": {
            "piece": {"type": "string"},
            "new_component": {"type": "string"},
            "model": MODEL_SCHEMA,
            "zeta_unchanged": {"type": "boolean"},
        },
    },
    "abelian": {
        "type": "object",
        "required": ["mode", "diagnostics"],
        "properties": {
            "mode": {"enum": ["semiabelian", "table"]},
            "diagnostics": {"type": "array", "items": {"type": "string"}},
            "normal_form": {"type": "string"},
            "poles": POLE_REPORT_SCHEMA,
            "theorem": {"type": "object"},
            "coefficients": {"type": "array", "items": {"type": "string"}},
            "scale": {"type": "integer", "minimum": 1},
        },
    },
    "validate": {
        "type": "object",
        "required": ["valid", "diagnostics"],
        "properties": {
            "valid": {"type": "boolean"},
            "diagnostics": {"type": "array", "items": {"type": "string"}},
        },
    },
    "describe": {
        "type": "object",
        "required": ["components", "strata"],
        "properties": {"components": {"type": "array"}, "strata": {"type": "array"}},
    },
}

ENVELOPE_SCHEMA = {
    "$schema": "http://json-schema.org/draft-07/schema#",
    "$id": f"{_BASE}/report.json",
    "title": "Report",
    "type": "object",
    "required": ["schema_version", "subcommand", "input", "report"],
    "additionalProperties": False,
    "properties": {
        "schema_version": {"const": SCHEMA_VERSION},
        "subcommand": {"enum": sorted(REPORT_SCHEMAS)},
        "input": {"type": "string"},
        "report": {},
    },
}
