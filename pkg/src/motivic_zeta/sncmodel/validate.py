"""Structural validation of snc-model data."""

from __future__ import annotations

from collections import Counter
from typing import List

from motivic_zeta.sncmodel.models import ModelValidationError, SncModelData


def validate(model: SncModelData) -> List[str]:
    """
    Check every structural invariant of a model.

    Returns:
        Diagnostics naming the offending piece or component ids; empty iff valid
    """
    diagnostics: List[str] = []

    if model.dim < 1:
        diagnostics.append(f"model {model.name}: dimension must be positive, got {model.dim}")

    for comp_id, count in Counter(c.id for c in model.components).items():
        if count > 1:
            diagnostics.append(f"component {comp_id}: duplicate component id")
    for piece_id, count in Counter(p.id for p in model.pieces).items():
        if count > 1:
            diagnostics.append(f"piece {piece_id}: duplicate piece id")

    if not model.components:
        diagnostics.append(f"model {model.name}: model has no components")

    for c in model.components:
        if c.N < 1:
            diagnostics.append(f"component {c.id}: multiplicity must be positive (N={c.N})")

    known = {c.id for c in model.components}
    pieces = model.piece_map()
    for p in model.pieces:
        if not p.J:
            diagnostics.append(f"piece {p.id}: empty index set")
            continue
        if p.repeated:
            diagnostics.append(f"piece {p.id}: repeated components {', '.join(p.repeated)}")
        unknown = sorted(p.J - known)
        if unknown:
            diagnostics.append(f"piece {p.id}: unknown components {', '.join(unknown)}")
        if p.size > model.dim + 1:
            diagnostics.append(
                f"piece {p.id}: stratum exceeds dimension bound (|J|={p.size} > {model.dim + 1})"
            )
        if p.facets is not None and p.size >= 2:
            facets = p.facet_map()
            if set(facets) != set(p.J):
                diagnostics.append(f"piece {p.id}: facets must be given for exactly the ids in J")
            for j, target in sorted(facets.items()):
                face = pieces.get(target)
                if face is None:
                    diagnostics.append(f"piece {p.id}: facet {j} references missing piece {target}")
                elif face.J != p.J - {j}:
                    diagnostics.append(
                        f"piece {p.id}: facet {j} references piece {target} "
                        f"with index set {sorted(face.J)} instead of {sorted(p.J - {j})}"
                    )

    singletons = {next(iter(p.J)) for p in model.pieces if p.size == 1}
    for c in model.components:
        if c.id not in singletons:
            diagnostics.append(f"component {c.id}: no singleton stratum piece")

    if model.components and not _connected(model):
        diagnostics.append(f"model {model.name}: dual complex is not connected")

    return diagnostics


def _connected(model: SncModelData) -> bool:
    adjacency = {c.id: set() for c in model.components}
    for p in model.pieces:
        ids = [j for j in p.J if j in adjacency]
        for a in ids:
            adjacency[a].update(ids)
    start = model.components[0].id
    seen = {start}
    stack = [start]
    while stack:
        for nxt in adjacency[stack.pop()]:
            if nxt not in seen:
                seen.add(nxt)
                stack.append(nxt)
    return len(seen) == len(adjacency)


def require_valid(model: SncModelData) -> None:
    """Raise ModelValidationError when validate() reports anything."""
    diagnostics = validate(model)
    if diagnostics:
        raise ModelValidationError(diagnostics)
