"""Euler characteristics of open strata."""

from __future__ import annotations

from typing import Dict

from motivic_zeta.sncmodel.models import InconsistentCoverError, SncModelData
from motivic_zeta.sncmodel.validate import require_valid
from motivic_zeta.vpoly import euler_char


def euler_open_strata(model: SncModelData) -> Dict[str, int]:
    """
    chi(E_i^o) for every component, from the degree-N_i cover class.

    Raises:
        InconsistentCoverError: If N_i does not divide chi of the cover class
    """
    require_valid(model)
    result: Dict[str, int] = {}
    for c in model.components:
        chi = sum(euler_char(p.tilde_class) for p in model.pieces if p.J == {c.id})
        if chi % c.N != 0:
            raise InconsistentCoverError(
                f"component {c.id}: inconsistent cover class (chi={chi} not divisible by N={c.N})"
            )
        result[c.id] = chi // c.N
    return result


def nearby_euler(model: SncModelData) -> int:
    """sum_i N_i chi(E_i^o), the Euler characteristic of the generic fiber."""
    chis = euler_open_strata(model)
    return sum(c.N * chis[c.id] for c in model.components)
