"""Unique-pole check for zeta functions of abelian varieties."""

import logging
from fractions import Fraction
from typing import Union

from motivic_zeta.abelian.models import AbelianTheoremCheck
from motivic_zeta.zeta import ZetaExpr, candidate_poles, certify_pole_order

logger = logging.getLogger(__name__)


def check_abelian_theorem(
    z: ZetaExpr, c: Union[Fraction, int, str], t_pot: int
) -> AbelianTheoremCheck:
    """
    Passes iff z has the single candidate pole c, of certified order t_pot + 1.
    """
    c = Fraction(c)
    result = AbelianTheoremCheck(
        expected_pole=c,
        expected_order=t_pot + 1,
        candidates=candidate_poles(z),
        certified=certify_pole_order(z, c),
    )
    logger.debug(f"Unique-pole check at {c} with order {t_pot + 1}: passed={result.passed}")
    return result
