"""Exact coefficient arithmetic: Laurent polynomials, motivic classes, Q(v)."""

from .laurent import (
    ClassError,
    DimensionUndefinedError,
    LaurentPoly,
    MotClass,
    euler_char,
    is_effective_of_dim,
    virtual_dim,
)
from .parser import ClassParseError, parse_class, parse_laurent
from .ratfunc import RatFunc

__all__ = [
    "ClassError",
    "ClassParseError",
    "DimensionUndefinedError",
    "LaurentPoly",
    "MotClass",
    "RatFunc",
    "euler_char",
    "is_effective_of_dim",
    "parse_class",
    "parse_laurent",
    "virtual_dim",
]
