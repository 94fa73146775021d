"""Exact Laurent polynomials in u and motivic classes under the Poincaré specialization."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, Optional, Union


class ClassError(Exception):
    """Base exception for motivic class errors."""
    pass


class DimensionUndefinedError(ClassError):
    """Raised when asking for the dimension of the zero class."""
    pass


@dataclass(frozen=True, init=False)
class LaurentPoly:
    """
    Sparse Laurent polynomial in u over the integers.

    Stored as a tuple of (exponent, coefficient) pairs sorted by exponent,
    with no zero coefficients, so equality is structural.

    >>> LaurentPoly({2: 1, 0: -1}).render()
    'u^2 - 1'
    """

    terms: tuple[tuple[int, int], ...]

    def __init__(self, coeffs: Union[Mapping[int, int], Iterable[tuple[int, int]], None] = None):
        merged: dict[int, int] = {}
        items = coeffs.items() if isinstance(coeffs, Mapping) else (coeffs or ())
        for exp, c in items:
            merged[int(exp)] = merged.get(int(exp), 0) + int(c)
        object.__setattr__(
            self, "terms", tuple(sorted((e, c) for e, c in merged.items() if c != 0))
        )

    @classmethod
    def constant(cls, c: int) -> "LaurentPoly":
        return cls({0: c})

    @classmethod
    def monomial(cls, exp: int, c: int = 1) -> "LaurentPoly":
        return cls({exp: c})

    @classmethod
    def zero(cls) -> "LaurentPoly":
        return cls()

    @classmethod
    def one(cls) -> "LaurentPoly":
        return cls({0: 1})

    @property
    def coeffs(self) -> dict[int, int]:
        return dict(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def degree(self) -> int:
        if not self.terms:
            raise ValueError("degree of the zero polynomial")
        return self.terms[-1][0]

    def valuation(self) -> int:
        if not self.terms:
            raise ValueError("valuation of the zero polynomial")
        return self.terms[0][0]

    def leading_coefficient(self) -> int:
        return self.terms[-1][1] if self.terms else 0

    def coefficient(self, exp: int) -> int:
        return self.coeffs.get(exp, 0)

    def evaluate(self, x):
        """Evaluate at x; x may be any ring element supporting integer powers."""
        return sum(c * x**e for e, c in self.terms)

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by u^k."""
        return LaurentPoly((e + k, c) for e, c in self.terms)

    def substitute_power(self, b: int) -> "LaurentPoly":
        """Substitute u = v^b, returning a Laurent polynomial in v."""
        if b < 1:
            raise ValueError(f"substitution power must be positive, got {b}")
        return LaurentPoly((e * b, c) for e, c in self.terms)

    def __iter__(self) -> Iterator[tuple[int, int]]:
        return iter(self.terms)

    def __bool__(self) -> bool:
        return bool(self.terms)

    @staticmethod
    def _coerce(other) -> Optional["LaurentPoly"]:
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, int):
            return LaurentPoly.constant(other)
        return None

    def __add__(self, other) -> "LaurentPoly":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return LaurentPoly(list(self.terms) + list(other.terms))

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly((e, -c) for e, c in self.terms)

    def __sub__(self, other) -> "LaurentPoly":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "LaurentPoly":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> "LaurentPoly":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        product: dict[int, int] = {}
        for e1, c1 in self.terms:
            for e2, c2 in other.terms:
                product[e1 + e2] = product.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly(product)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentPoly":
        if n < 0:
            if len(self.terms) != 1 or self.terms[0][1] not in (1, -1):
                raise ValueError("negative powers are only defined for unit monomials")
            (e, c), = self.terms
            return LaurentPoly({e * n: c**(-n)})
        result = LaurentPoly.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def render(self, var: str = "u") -> str:
        """Canonical text: descending exponents, explicit signs, `u^k` powers."""
        if not self.terms:
            return "0"
        parts: list[str] = []
        for exp, c in reversed(self.terms):
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if exp == 0:
                body = str(mag)
            else:
                power = var if exp == 1 else f"{var}^{exp}"
                body = power if mag == 1 else f"{mag}*{power}"
            if not parts:
                parts.append(body if sign == "+" else f"-{body}")
            else:
                parts.append(f" {sign} {body}")
        return "".join(parts)

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"LaurentPoly('{self.render()}')"


@dataclass(frozen=True)
class MotClass:
    """
    Image of a Grothendieck-ring class under the Poincaré specialization.

    The Lefschetz class L maps to u^2.

    Args:
        poly: virtual Poincaré polynomial of the class
    """

    poly: LaurentPoly

    @classmethod
    def of(cls, value: Union["MotClass", LaurentPoly, int]) -> "MotClass":
        if isinstance(value, MotClass):
            return value
        if isinstance(value, LaurentPoly):
            return cls(value)
        return cls(LaurentPoly.constant(value))

    @classmethod
    def zero(cls) -> "MotClass":
        return cls(LaurentPoly.zero())

    @classmethod
    def one(cls) -> "MotClass":
        return cls(LaurentPoly.one())

    @classmethod
    def lefschetz(cls, power: int = 1) -> "MotClass":
        """L^power = u^(2*power)."""
        return cls(LaurentPoly.monomial(2 * power))

    def is_zero(self) -> bool:
        return self.poly.is_zero()

    def __bool__(self) -> bool:
        return not self.poly.is_zero()

    def __add__(self, other) -> "MotClass":
        if not isinstance(other, (MotClass, LaurentPoly, int)):
            return NotImplemented
        return MotClass(self.poly + MotClass.of(other).poly)

    __radd__ = __add__

    def __sub__(self, other) -> "MotClass":
        if not isinstance(other, (MotClass, LaurentPoly, int)):
            return NotImplemented
        return MotClass(self.poly - MotClass.of(other).poly)

    def __rsub__(self, other) -> "MotClass":
        if not isinstance(other, (MotClass, LaurentPoly, int)):
            return NotImplemented
        return MotClass(MotClass.of(other).poly - self.poly)

    def __neg__(self) -> "MotClass":
        return MotClass(-self.poly)

    def __mul__(self, other) -> "MotClass":
        if not isinstance(other, (MotClass, LaurentPoly, int)):
            return NotImplemented
        return MotClass(self.poly * MotClass.of(other).poly)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "MotClass":
        return MotClass(self.poly**n)

    def times_lefschetz(self, power: int) -> "MotClass":
        return MotClass(self.poly.shift(2 * power))

    def render(self) -> str:
        return self.poly.render()

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"MotClass('{self.render()}')"


def euler_char(c: MotClass) -> int:
    """Topological Euler characteristic: the specialization at u = 1."""
    return sum(coeff for _, coeff in c.poly)


def virtual_dim(c: MotClass) -> Optional[int]:
    """
    Dimension of an effective-variety class.

    Returns:
        degree / 2 when the top degree is even and its coefficient positive,
        otherwise None (not an effective-variety class)

    Raises:
        DimensionUndefinedError: If the class is zero
    """
    if c.is_zero():
        raise DimensionUndefinedError("dimension undefined for the zero class")
    top = c.poly.degree()
    if top % 2 != 0 or c.poly.leading_coefficient() <= 0:
        return None
    return top // 2


def is_effective_of_dim(c: MotClass, n: int) -> bool:
    """True when c has degree 2n with a positive leading coefficient."""
    return not c.is_zero() and virtual_dim(c) == n
