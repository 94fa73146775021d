"""Monodromy Property check: poles of the zeta function against A'Campo eigenvalues."""

import logging

from motivic_zeta.monodromy.acampo import acampo_zeta
from motivic_zeta.monodromy.cyclo import cyclotomic_multiplicities
from motivic_zeta.monodromy.models import MPPoleEntry, MPPredictions, MPReport
from motivic_zeta.sncmodel import SncModelData, degeneracy_index, min_weight, zeta_from_model
from motivic_zeta.zeta import candidate_poles

logger = logging.getLogger(__name__)


def check_monodromy_property(model: SncModelData) -> MPReport:
    """
    Match every candidate pole q = a/b with the b-th cyclotomic multiplicity.

    A pole is certified when c_b != 0, since then every primitive b-th root of
    unity, exp(2 pi i q) among them, is an eigenvalue on some cohomology group.
    c_b = 0 is inconclusive because the alternating product may cancel.
    """
    zeta = zeta_from_model(model)
    multiplicities = cyclotomic_multiplicities(acampo_zeta(model))
    entries = [
        MPPoleEntry(q=q, m=q.denominator, c_m=multiplicities.get(q.denominator, 0))
        for q in candidate_poles(zeta)
    ]
    report = MPReport(
        model_name=model.name,
        entries=entries,
        predictions=MPPredictions(min_weight=min_weight(model), delta=degeneracy_index(model)),
    )
    logger.info(f"Monodromy Property for {model.name}: {report.summary}")
    return report
