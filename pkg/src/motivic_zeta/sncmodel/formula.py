"""Explicit zeta formula on an snc-model."""

from __future__ import annotations

import logging
from typing import Dict, FrozenSet

from motivic_zeta.sncmodel.models import ModelError, SncModelData
from motivic_zeta.sncmodel.validate import require_valid
from motivic_zeta.vpoly import MotClass
from motivic_zeta.zeta import DenomFactor, GeomTerm, ZetaExpr, constant_term

logger = logging.getLogger(__name__)


def grouped_classes(model: SncModelData) -> Dict[FrozenSet[str], MotClass]:
    """Sum of cover classes over the pieces of each stratum E_J^o."""
    grouped: Dict[FrozenSet[str], MotClass] = {}
    for p in model.pieces:
        grouped[p.J] = grouped.get(p.J, MotClass.zero()) + p.tilde_class
    return grouped


def zeta_from_model(model: SncModelData) -> ZetaExpr:
    """
    Z(T) = sum_J [E~_J^o] (L-1)^(|J|-1) prod_{j in J} L^(-nu_j) T^(N_j) / (1 - L^(-nu_j) T^(N_j)).

    Raises:
        ModelValidationError: If the model is invalid
    """
    require_valid(model)
    comps = model.component_map()
    lefschetz_minus_one = MotClass.lefschetz() - 1
    terms = []
    for J, cls in sorted(grouped_classes(model).items(), key=lambda kv: (len(kv[0]), sorted(kv[0]))):
        if cls.is_zero():
            continue
        members = [comps[j] for j in sorted(J)]
        coeff = cls * lefschetz_minus_one ** (len(J) - 1)
        coeff = coeff.times_lefschetz(-sum(c.nu for c in members))
        terms.append(
            GeomTerm(
                coeff=coeff,
                tpow=sum(c.N for c in members),
                denom=tuple(DenomFactor(-c.nu, c.N) for c in members),
            )
        )
    zeta = ZetaExpr(tuple(terms))
    if not constant_term(zeta).is_zero():
        raise ModelError(f"model {model.name}: zeta function has a nonzero constant term")
    logger.info(f"Built zeta function of {model.name} from {len(terms)} strata")
    return zeta
