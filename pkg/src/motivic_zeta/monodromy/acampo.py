"""A'Campo's formula for the monodromy zeta function."""

import logging
from collections import defaultdict

from motivic_zeta.monodromy.cyclo import CycloProduct
from motivic_zeta.sncmodel import SncModelData, euler_open_strata, nearby_euler

logger = logging.getLogger(__name__)


def acampo_zeta(model: SncModelData) -> CycloProduct:
    """
    prod_i (t^N_i - 1)^(-chi(E_i^o)).

    Raises:
        InconsistentCoverError: If a cover class has Euler characteristic not divisible by N_i
    """
    chis = euler_open_strata(model)
    exps = defaultdict(int)
    for c in model.components:
        exps[c.N] -= chis[c.id]
    result = CycloProduct(dict(exps))
    logger.debug(f"A'Campo zeta of {model.name}: {result.render()}")
    return result


def degree_identity_holds(model: SncModelData) -> bool:
    """The A'Campo product has degree minus the Euler characteristic of the generic fiber."""
    return acampo_zeta(model).degree() == -nearby_euler(model)
