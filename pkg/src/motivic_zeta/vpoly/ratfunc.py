"""Rational functions over Q in the auxiliary variable v, backed by sympy's fraction field."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from sympy import QQ
from sympy.polys.fields import FracElement, field

from motivic_zeta.vpoly.laurent import LaurentPoly

_FIELD, _V = field("v", QQ)
_RING = _FIELD.ring

Scalar = Union[int, Fraction]


@dataclass(frozen=True)
class RatFunc:
    """
    Reduced element of Q(v).

    sympy keeps numerator and denominator coprime after every operation;
    `numerator` and `denominator` expose the monic-denominator normalization.
    """

    value: FracElement

    @classmethod
    def from_scalar(cls, c: Scalar) -> "RatFunc":
        c = Fraction(c)
        return cls(_FIELD(QQ(c.numerator, c.denominator)))

    @classmethod
    def zero(cls) -> "RatFunc":
        return cls(_FIELD.zero)

    @classmethod
    def one(cls) -> "RatFunc":
        return cls(_FIELD.one)

    @classmethod
    def monomial(cls, exp: int, c: Scalar = 1) -> "RatFunc":
        """c * v^exp, exp may be negative."""
        return cls.from_laurent(LaurentPoly.monomial(exp, 1)) * cls.from_scalar(c)

    @classmethod
    def from_laurent(cls, p: LaurentPoly) -> "RatFunc":
        """Embed a Laurent polynomial in v into Q(v)."""
        if p.is_zero():
            return cls.zero()
        low = min(0, p.valuation())
        numer = _RING.from_dict({(e - low,): c for e, c in p})
        denom = _RING.from_dict({(-low,): 1})
        return cls(_FIELD.new(numer, denom))

    def is_zero(self) -> bool:
        return not self.value

    def _as_pair(self) -> tuple:
        numer, denom = self.value.numer, self.value.denom
        lc = denom.LC
        return numer.quo_ground(lc), denom.monic()

    @property
    def numerator(self) -> list[Fraction]:
        """Numerator coefficients, highest degree first, for the monic denominator."""
        numer, _ = self._as_pair()
        return _coeff_list(numer)

    @property
    def denominator(self) -> list[Fraction]:
        _, denom = self._as_pair()
        return _coeff_list(denom)

    @staticmethod
    def _coerce(other) -> "RatFunc":
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, (int, Fraction)):
            return RatFunc.from_scalar(other)
        if isinstance(other, LaurentPoly):
            return RatFunc.from_laurent(other)
        raise TypeError(f"cannot combine RatFunc with {type(other).__name__}")

    def __add__(self, other) -> "RatFunc":
        return RatFunc(self.value + self._coerce(other).value)

    __radd__ = __add__

    def __sub__(self, other) -> "RatFunc":
        return RatFunc(self.value - self._coerce(other).value)

    def __rsub__(self, other) -> "RatFunc":
        return RatFunc(self._coerce(other).value - self.value)

    def __neg__(self) -> "RatFunc":
        return RatFunc(-self.value)

    def __mul__(self, other) -> "RatFunc":
        return RatFunc(self.value * self._coerce(other).value)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "RatFunc":
        other = self._coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("division by the zero rational function")
        return RatFunc(self.value / other.value)

    def __eq__(self, other) -> bool:
        if not isinstance(other, RatFunc):
            try:
                other = self._coerce(other)
            except TypeError:
                return NotImplemented
        # cross-multiplication equality
        return self.value.numer * other.value.denom == other.value.numer * self.value.denom

    def __hash__(self) -> int:
        numer, denom = self._as_pair()
        return hash((str(numer), str(denom)))

    def __str__(self) -> str:
        return str(self.value.as_expr())

    def __repr__(self) -> str:
        return f"RatFunc({self})"


def _coeff_list(poly) -> list[Fraction]:
    if not poly:
        return [Fraction(0)]
    degree = poly.degree()
    coeffs = [Fraction(0)] * (degree + 1)
    for (exp,), c in poly.terms():
        coeffs[degree - exp] = Fraction(int(c.numerator), int(c.denominator))
    return coeffs
