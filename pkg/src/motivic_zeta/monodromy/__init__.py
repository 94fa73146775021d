"""Monodromy zeta function via A'Campo's formula and the Monodromy Property check."""

from .acampo import acampo_zeta, degree_identity_holds
from .cyclo import (
    CycloProduct,
    certified_eigenvalues,
    cyclotomic_multiplicities,
    cyclotomic_polynomials,
    factorization_holds,
    from_cyclotomic,
)
from .models import CERTIFIED, INCONCLUSIVE, MPPoleEntry, MPPredictions, MPReport
from .property import check_monodromy_property

__all__ = [
    "CERTIFIED",
    "INCONCLUSIVE",
    "CycloProduct",
    "MPPoleEntry",
    "MPPredictions",
    "MPReport",
    "acampo_zeta",
    "certified_eigenvalues",
    "check_monodromy_property",
    "cyclotomic_multiplicities",
    "cyclotomic_polynomials",
    "degree_identity_holds",
    "factorization_holds",
    "from_cyclotomic",
]
