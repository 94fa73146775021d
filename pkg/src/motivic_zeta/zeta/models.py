"""Data models for zeta expressions and pole reports."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, List

from motivic_zeta.vpoly import MotClass


class ZetaError(Exception):
    """Base exception for zeta expression errors."""
    pass


class PoleError(ZetaError):
    """Raised for malformed pole targets."""
    pass


@dataclass(frozen=True)
class DenomFactor:
    """
    The factor (1 - L^a T^b).

    Args:
        a: exponent of L
        b: exponent of T, at least 1
    """

    a: int
    b: int

    def __post_init__(self):
        if self.b < 1:
            raise ValueError(f"T-exponent must be positive, got {self.b}")

    @property
    def pole(self) -> Fraction:
        return Fraction(self.a, self.b)

    def sort_key(self) -> tuple:
        return (self.pole, self.b, self.a)

    def shifted(self, m: int) -> "DenomFactor":
        """Factor after the substitution T -> L^m T."""
        return DenomFactor(self.a + m * self.b, self.b)

    def render(self) -> str:
        return f"(1 - L^{self.a}*T^{self.b})"


def sorted_factors(factors: Iterable[DenomFactor]) -> tuple[DenomFactor, ...]:
    return tuple(sorted(factors, key=DenomFactor.sort_key))


@dataclass(frozen=True)
class GeomTerm:
    """
    coeff * T^tpow * prod (1 - L^a T^b)^-1 over the denominator multiset.

    Args:
        coeff: coefficient, absorbing all pure powers of L
        tpow: nonnegative power of T
        denom: multiset of DenomFactor, stored sorted
    """

    coeff: MotClass
    tpow: int
    denom: tuple[DenomFactor, ...] = ()

    def __post_init__(self):
        if self.tpow < 0:
            raise ValueError(f"T-power must be nonnegative, got {self.tpow}")
        object.__setattr__(self, "denom", sorted_factors(self.denom))

    def factor_counts(self) -> Counter:
        return Counter(self.denom)


@dataclass
class PoleEntry:
    """One candidate pole with its order bounds."""

    q: Fraction
    upper: int
    lower: int

    def __post_init__(self):
        if self.lower > self.upper:
            raise ValueError(
                f"certified lower order {self.lower} exceeds upper order {self.upper} at {self.q}"
            )

    @property
    def certified(self) -> bool:
        return self.lower == self.upper

    def to_dict(self) -> dict:
        return {
            "q": format_rational(self.q),
            "upper": self.upper,
            "lower": self.lower,
            "certified": self.certified,
        }


@dataclass
class PoleReport:
    """Candidate poles sorted by q, each with certified and upper orders."""

    entries: List[PoleEntry] = field(default_factory=list)

    def poles(self) -> dict[Fraction, tuple[int, int]]:
        return {e.q: (e.lower, e.upper) for e in self.entries}

    def to_list(self) -> list[dict]:
        return [e.to_dict() for e in self.entries]


def format_rational(q: Fraction) -> str:
    return str(Fraction(q))
