"""Data models for the Monodromy Property check."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional

from motivic_zeta.zeta.models import format_rational

CERTIFIED = "certified"
INCONCLUSIVE = "inconclusive"


@dataclass
class MPPoleEntry:
    """
    Eigenvalue evidence for one candidate pole.

    Args:
        q: the pole, a reduced rational a/b
        m: the denominator b, the order of the root of unity exp(2 pi i q)
        c_m: multiplicity of Phi_m in the A'Campo product
    """

    q: Fraction
    m: int
    c_m: int

    @property
    def status(self) -> str:
        return CERTIFIED if self.c_m != 0 else INCONCLUSIVE

    def to_dict(self) -> dict:
        return {"q": format_rational(self.q), "m": self.m, "c_m": self.c_m, "status": self.status}


@dataclass
class MPPredictions:
    """Hodge-theoretic predictions; emitted for comparison, never used as evidence."""

    min_weight: Fraction
    delta: int

    @property
    def eigenvalue(self) -> str:
        return f"exp(-2*pi*i*{format_rational(self.min_weight)})"

    @property
    def jordan_block_at_least(self) -> int:
        return self.delta + 1

    def to_dict(self) -> dict:
        return {
            "min_weight": format_rational(self.min_weight),
            "eigenvalue": self.eigenvalue,
            "jordan_block_at_least": self.jordan_block_at_least,
        }


@dataclass
class MPReport:
    """Monodromy Property verdict for a model: certified or inconclusive, never refuted."""

    model_name: str
    entries: List[MPPoleEntry] = field(default_factory=list)
    predictions: Optional[MPPredictions] = None

    @property
    def verdict(self) -> str:
        return CERTIFIED if all(e.status == CERTIFIED for e in self.entries) else INCONCLUSIVE

    @property
    def summary(self) -> str:
        return "MP certified" if self.verdict == CERTIFIED else "inconclusive (never refuted)"

    @property
    def equivariant_kulikov_possible(self) -> Optional[bool]:
        """False when there is more than one pole; a single pole decides nothing."""
        return False if len(self.entries) > 1 else None

    def to_dict(self) -> dict:
        return {
            "poles": [e.to_dict() for e in self.entries],
            "verdict": self.verdict,
            "predictions": self.predictions.to_dict() if self.predictions else None,
            "equivariant_kulikov_possible": self.equivariant_kulikov_possible,
        }
