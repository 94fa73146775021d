"""Blow-up of a stratum piece, for model-independence checks."""

from __future__ import annotations

import logging
from itertools import combinations
from typing import Dict, FrozenSet, List, Optional, Tuple

from motivic_zeta.sncmodel.models import (
    Component,
    ModelError,
    SncModelData,
    StratumPiece,
    UnsupportedBlowupError,
)
from motivic_zeta.sncmodel.validate import require_valid
from motivic_zeta.vpoly import MotClass

logger = logging.getLogger(__name__)


def _descend(pieces: Dict[str, StratumPiece], start: StratumPiece, drop) -> StratumPiece:
    """Follow facets from `start`, removing the components in `drop` one by one."""
    current = start
    for j in sorted(drop):
        current = pieces[current.facet(j)]
    return current


def _pieces_over(model: SncModelData, center: StratumPiece) -> List[StratumPiece]:
    """Pieces Q with J_Q containing J whose closure meets the center piece."""
    J = center.J
    containing = [p for p in model.pieces if p.J >= J]
    if model.has_facets:
        pieces = model.piece_map()
        return [q for q in containing if _descend(pieces, q, q.J - J).id == center.id]
    if sum(1 for p in model.pieces if p.J == J) > 1:
        raise UnsupportedBlowupError(
            f"facet incidences are required to locate the strata over piece {center.id}"
        )
    return containing


def _fresh_id(taken: set, base: str) -> str:
    candidate = base
    while candidate in taken:
        candidate += "'"
    return candidate


def blowup_stratum(model: SncModelData, piece_id: str) -> SncModelData:
    """
    Blow up the closure of a stratum piece with |J| >= 2 and all N_j = 1.

    The exceptional component E gets N = |J| and, in the log convention,
    nu = sum of nu_j. Each piece Q over the center is replaced by pieces
    indexed by {E} + S + (J_Q - J) for proper subsets S of J, with class
    [Q] (L-1)^(|J|-1-|S|).

    Raises:
        UnsupportedBlowupError: For |J| < 2, unequal multiplicities or nontrivial covers
        ModelValidationError: If the input model is invalid
    """
    require_valid(model)
    try:
        center = model.piece(piece_id)
    except KeyError:
        raise ModelError(f"unknown piece {piece_id}") from None
    J = center.J
    if center.size < 2:
        raise UnsupportedBlowupError(f"piece {piece_id}: blow-up center needs |J| >= 2")
    comps = model.component_map()
    multiplicities = {comps[j].N for j in J}
    if len(multiplicities) > 1:
        raise UnsupportedBlowupError(
            f"piece {piece_id}: unequal multiplicities {sorted(multiplicities)} along the center"
        )
    if multiplicities != {1}:
        raise UnsupportedBlowupError(
            f"piece {piece_id}: unsupported: nontrivial cover transport (N={multiplicities.pop()})"
        )

    r = len(J)
    exceptional = Component(
        id=_fresh_id(set(comps), f"E_{piece_id}"),
        N=sum(comps[j].N for j in J),
        nu=sum(comps[j].nu for j in J),
    )
    affected = _pieces_over(model, center)
    affected_ids = {q.id for q in affected}
    with_facets = model.has_facets
    old_pieces = model.piece_map()
    lefschetz_minus_one = MotClass.lefschetz() - 1
    proper_subsets: List[FrozenSet[str]] = [
        frozenset(s) for size in range(r) for s in combinations(sorted(J), size)
    ]

    taken = set(old_pieces)
    new_ids: Dict[Tuple[str, FrozenSet[str]], str] = {}
    for q in affected:
        for s in proper_subsets:
            label = f"{exceptional.id}|{q.id}" + (f"|{','.join(sorted(s))}" if s else "")
            new_ids[(q.id, s)] = _fresh_id(taken, label)
            taken.add(new_ids[(q.id, s)])

    new_pieces: List[StratumPiece] = []
    for q in affected:
        outside = q.J - J
        for s in proper_subsets:
            index_set = frozenset({exceptional.id}) | s | outside
            facets: Optional[Dict[str, str]] = None
            if with_facets and len(index_set) >= 2:
                facets = {exceptional.id: _descend(old_pieces, q, J - s).id}
                for x in s:
                    facets[x] = new_ids[(q.id, s - {x})]
                for x in outside:
                    facets[x] = new_ids[(q.facet(x), s)]
            new_pieces.append(
                StratumPiece(
                    id=new_ids[(q.id, s)],
                    J=index_set,
                    tilde_class=q.tilde_class * lefschetz_minus_one ** (r - 1 - len(s)),
                    facets=facets,
                )
            )

    kept = [p for p in model.pieces if p.id not in affected_ids]
    result = SncModelData(
        name=f"{model.name}+blowup({piece_id})",
        dim=model.dim,
        components=model.components + (exceptional,),
        pieces=tuple(kept + new_pieces),
    )
    require_valid(result)
    logger.info(
        f"Blew up piece {piece_id} of {model.name}: "
        f"{len(affected)} pieces replaced by {len(new_pieces)}"
    )
    return result
