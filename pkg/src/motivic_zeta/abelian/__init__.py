"""Zeta functions of abelian varieties: closed forms, oracle tables and the unique-pole check."""

from .closed_form import (
    chevalley_class,
    closed_form_table,
    eulerian_zeta,
    semiabelian_table,
    zeta_semiabelian,
)
from .loader import AbelianInput, abelian_from_dict, load_abelian
from .models import (
    AbelianError,
    AbelianInputError,
    AbelianOracleTable,
    AbelianTheoremCheck,
    GranularityError,
    MissingRowError,
    OracleRow,
    SemiAbelianInput,
    TruncatedSeries,
)
from .oracle import (
    related_by_base_change,
    related_by_progression,
    single_row_mutations,
    validate_oracle_table,
    zeta_truncated,
)
from .theorem import check_abelian_theorem

__all__ = [
    "AbelianError",
    "AbelianInput",
    "AbelianInputError",
    "AbelianOracleTable",
    "AbelianTheoremCheck",
    "GranularityError",
    "MissingRowError",
    "OracleRow",
    "SemiAbelianInput",
    "TruncatedSeries",
    "abelian_from_dict",
    "check_abelian_theorem",
    "chevalley_class",
    "closed_form_table",
    "eulerian_zeta",
    "load_abelian",
    "related_by_base_change",
    "related_by_progression",
    "semiabelian_table",
    "single_row_mutations",
    "validate_oracle_table",
    "zeta_semiabelian",
    "zeta_truncated",
]
