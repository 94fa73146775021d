"""Weight function, essential skeleton and degeneracy index."""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping, Union

from motivic_zeta.sncmodel.models import ModelError, Skeleton, SncModelData, WeightError
from motivic_zeta.sncmodel.validate import require_valid

Weight = Union[Fraction, int, str]


def min_ratio(model: SncModelData) -> Fraction:
    return min(c.ratio for c in model.components)


def min_weight(model: SncModelData) -> Fraction:
    """min(omega) = min_i nu_i/N_i + 1."""
    require_valid(model)
    return min_ratio(model) + 1


def largest_pole(model: SncModelData) -> Fraction:
    """1 - min(omega)."""
    return 1 - min_weight(model)


def essential_skeleton(model: SncModelData) -> Skeleton:
    """Faces whose components all have minimal ratio nu/N."""
    require_valid(model)
    lowest = min_ratio(model)
    vertices = sorted(c.id for c in model.components if c.ratio == lowest)
    vertex_set = set(vertices)
    faces = [p for p in model.pieces if p.J <= vertex_set]
    faces.sort(key=lambda p: (p.size, p.ordered_J(), p.id))
    return Skeleton(
        model_name=model.name,
        dim=model.dim,
        vertices=vertices,
        faces=faces,
        weights={c.id: c.ratio + 1 for c in model.components},
        min_weight=lowest + 1,
        has_facets=model.has_facets,
    )


def degeneracy_index(model: SncModelData) -> int:
    return essential_skeleton(model).delta


def weight_at(model: SncModelData, piece_id: str, w: Mapping[str, Weight]) -> Fraction:
    """
    Weight function at the point of a face with coordinates w.

    Args:
        model: the snc-model
        piece_id: face of the dual complex
        w: nonnegative rationals indexed by J with sum_j w_j N_j = 1

    Returns:
        sum_j w_j nu_j + 1

    Raises:
        WeightError: If the coordinates are not a point of the face
    """
    try:
        piece = model.piece(piece_id)
    except KeyError:
        raise ModelError(f"unknown piece {piece_id}") from None
    weights = {j: Fraction(v) for j, v in w.items()}
    if set(weights) != set(piece.J):
        raise WeightError(
            f"weights must be indexed by {sorted(piece.J)}, got {sorted(weights)}"
        )
    if any(v < 0 for v in weights.values()):
        raise WeightError("weights must be nonnegative")
    comps = model.component_map()
    total = sum(weights[j] * comps[j].N for j in piece.J)
    if total != 1:
        raise WeightError(f"sum of w_j N_j must be 1, got {total}")
    return sum((weights[j] * comps[j].nu for j in piece.J), Fraction(0)) + 1
