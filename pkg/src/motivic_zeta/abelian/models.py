"""Inputs and results for abelian varieties: semi-abelian data and oracle tables."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from motivic_zeta.vpoly import LaurentPoly, MotClass, virtual_dim
from motivic_zeta.zeta.models import format_rational


class AbelianError(Exception):
    """Base exception for abelian-variety inputs."""
    pass


class AbelianInputError(AbelianError):
    """Raised when abelian input does not match its schema or class grammar."""
    pass


class MissingRowError(AbelianError):
    """Raised when an oracle table lacks a row needed for an expansion."""
    pass


class GranularityError(AbelianError):
    """Raised when e * ord_d is not an integer."""
    pass


@dataclass(frozen=True)
class SemiAbelianInput:
    """
    Abelian variety with semi-abelian reduction over the base.

    Args:
        class0: class of the special fiber of the Neron model
        t: toric rank
        ord: order of the volume form along the special fiber
        shift: rescaling T -> L^shift T, moving the unique pole to q = shift
    """

    class0: MotClass
    t: int
    ord: int = 0
    shift: int = 0

    def __post_init__(self):
        if self.t < 0:
            raise AbelianInputError(f"toric rank must be nonnegative, got {self.t}")
        if not self.class0.is_zero():
            dim = virtual_dim(self.class0)
            if dim is not None and self.t > dim:
                raise AbelianInputError(
                    f"toric rank {self.t} exceeds the dimension {dim} of the special fiber"
                )


@dataclass(frozen=True)
class OracleRow:
    """[A(d)_k], ord_A(d) and the toric rank t(A(d)) for one degree d."""

    cls: MotClass
    ord: Fraction
    t: int


@dataclass
class AbelianOracleTable:
    """
    Externally supplied rows for a tamely ramified abelian variety.

    Args:
        e: degree of the minimal extension with semi-abelian reduction
        c: base change conductor
        t_pot: potential toric rank
        rows: degree d -> OracleRow
        depth: expansion depth requested by the input, if any
    """

    e: int
    c: Fraction
    t_pot: int
    rows: Dict[int, OracleRow] = field(default_factory=dict)
    depth: Optional[int] = None

    def __post_init__(self):
        if self.e < 1:
            raise AbelianInputError(f"e must be at least 1, got {self.e}")
        self.c = Fraction(self.c)

    def degrees(self) -> List[int]:
        return sorted(self.rows)

    def row(self, d: int) -> OracleRow:
        try:
            return self.rows[d]
        except KeyError:
            raise MissingRowError(f"oracle table has no row for d={d}") from None

    def with_row(self, d: int, row: OracleRow) -> "AbelianOracleTable":
        rows = dict(self.rows)
        rows[d] = row
        return AbelianOracleTable(self.e, self.c, self.t_pot, rows, self.depth)


@dataclass
class TruncatedSeries:
    """
    Coefficients of T^1..T^D as Laurent polynomials in w = u^(1/scale).

    With scale 1 the coefficients are ordinary classes in u.
    """

    scale: int
    coefficients: List[LaurentPoly]

    @property
    def variable(self) -> str:
        return "u" if self.scale == 1 else "w"

    def as_classes(self) -> List[MotClass]:
        """Coefficients as classes in u, when every exponent is a multiple of the scale."""
        result = []
        for d, c in enumerate(self.coefficients, start=1):
            if any(exp % self.scale for exp, _ in c):
                raise GranularityError(
                    f"coefficient of T^{d} has exponents outside u^Z: {c.render('w')}"
                )
            result.append(MotClass(LaurentPoly({exp // self.scale: k for exp, k in c})))
        return result

    def render(self) -> List[str]:
        return [c.render(self.variable) for c in self.coefficients]


@dataclass
class AbelianTheoremCheck:
    """Unique-pole verdict for a zeta function claimed to come from an abelian variety."""

    expected_pole: Fraction
    expected_order: int
    candidates: Dict[Fraction, int]
    certified: Tuple[int, int]

    @property
    def passed(self) -> bool:
        return self.candidates == {self.expected_pole: self.expected_order} and self.certified == (
            self.expected_order,
            self.expected_order,
        )

    def to_dict(self) -> dict:
        return {
            "passed": self.passed,
            "expected_pole": format_rational(self.expected_pole),
            "expected_order": self.expected_order,
            "candidates": {format_rational(q): m for q, m in self.candidates.items()},
            "certified": {"lower": self.certified[0], "upper": self.certified[1]},
        }
