"""Rational zeta expressions, normal forms, series and pole certification."""

from .expr import (
    NormalForm,
    ZetaExpr,
    constant_term,
    normal_form,
    rescale_T,
    series_expand,
    theta,
    zadd,
    zscale,
)
from .models import DenomFactor, GeomTerm, PoleEntry, PoleError, PoleReport, ZetaError
from .poles import candidate_poles, certify_pole_order, parse_pole, pole_report

__all__ = [
    "DenomFactor",
    "GeomTerm",
    "NormalForm",
    "PoleEntry",
    "PoleError",
    "PoleReport",
    "ZetaError",
    "ZetaExpr",
    "candidate_poles",
    "certify_pole_order",
    "constant_term",
    "normal_form",
    "parse_pole",
    "pole_report",
    "rescale_T",
    "series_expand",
    "theta",
    "zadd",
    "zscale",
]
