"""snc-model ingestion, the explicit zeta formula, skeleta and dual-complex topology."""

from .blowup import blowup_stratum
from .euler import euler_open_strata, nearby_euler
from .formula import grouped_classes, zeta_from_model
from .loader import load_model, model_from_dict, model_to_dict, read_json
from .models import (
    Component,
    InconsistentCoverError,
    MissingFacetsError,
    ModelError,
    ModelParseError,
    ModelValidationError,
    Skeleton,
    SncModelData,
    StratumPiece,
    UnsupportedBlowupError,
    WeightError,
)
from .skeleton import (
    degeneracy_index,
    essential_skeleton,
    largest_pole,
    min_ratio,
    min_weight,
    weight_at,
)
from .topology import (
    KulikovClassification,
    PseudoManifoldReport,
    dual_complex_homology,
    kulikov_type,
    pseudo_manifold_check,
)
from .validate import require_valid, validate

__all__ = [
    "Component",
    "InconsistentCoverError",
    "KulikovClassification",
    "MissingFacetsError",
    "ModelError",
    "ModelParseError",
    "ModelValidationError",
    "PseudoManifoldReport",
    "Skeleton",
    "SncModelData",
    "StratumPiece",
    "UnsupportedBlowupError",
    "WeightError",
    "blowup_stratum",
    "degeneracy_index",
    "dual_complex_homology",
    "essential_skeleton",
    "euler_open_strata",
    "grouped_classes",
    "kulikov_type",
    "largest_pole",
    "load_model",
    "min_ratio",
    "min_weight",
    "model_from_dict",
    "model_to_dict",
    "nearby_euler",
    "pseudo_manifold_check",
    "read_json",
    "require_valid",
    "validate",
    "weight_at",
    "zeta_from_model",
]
