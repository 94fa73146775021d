"""Dense polynomials in T with Laurent-polynomial coefficients."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Optional, Sequence

from motivic_zeta.vpoly import LaurentPoly

_ZERO = LaurentPoly.zero()


@dataclass(frozen=True, init=False)
class TPoly:
    """Polynomial sum_k coeffs[k] * T^k; trailing zero coefficients are trimmed."""

    coeffs: tuple[LaurentPoly, ...]

    def __init__(self, coeffs: Sequence[LaurentPoly] = ()):
        coeffs = list(coeffs)
        while coeffs and coeffs[-1].is_zero():
            coeffs.pop()
        object.__setattr__(self, "coeffs", tuple(coeffs))

    @classmethod
    def monomial(cls, k: int, c: LaurentPoly) -> "TPoly":
        return cls([_ZERO] * k + [c])

    @classmethod
    def one(cls) -> "TPoly":
        return cls([LaurentPoly.one()])

    @classmethod
    def one_minus(cls, u_exp: int, b: int) -> "TPoly":
        """1 - u^u_exp * T^b."""
        return cls([LaurentPoly.one()] + [_ZERO] * (b - 1) + [LaurentPoly.monomial(u_exp, -1)])

    @classmethod
    def product(cls, factors: Iterable["TPoly"]) -> "TPoly":
        result = cls.one()
        for f in factors:
            result = result * f
        return result

    def is_zero(self) -> bool:
        return not self.coeffs

    def degree(self) -> int:
        return len(self.coeffs) - 1

    def coefficient(self, k: int) -> LaurentPoly:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else _ZERO

    def items(self) -> Iterable[tuple[int, LaurentPoly]]:
        return ((k, c) for k, c in enumerate(self.coeffs) if not c.is_zero())

    def map_coeffs(self, fn: Callable[[LaurentPoly], LaurentPoly]) -> "TPoly":
        return TPoly([fn(c) for c in self.coeffs])

    def __add__(self, other: "TPoly") -> "TPoly":
        size = max(len(self.coeffs), len(other.coeffs))
        return TPoly([self.coefficient(k) + other.coefficient(k) for k in range(size)])

    def __neg__(self) -> "TPoly":
        return TPoly([-c for c in self.coeffs])

    def __sub__(self, other: "TPoly") -> "TPoly":
        return self + (-other)

    def __mul__(self, other: "TPoly") -> "TPoly":
        if self.is_zero() or other.is_zero():
            return TPoly()
        result = [_ZERO] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j, b in enumerate(other.coeffs):
                if not b.is_zero():
                    result[i + j] = result[i + j] + a * b
        return TPoly(result)

    def scale(self, c: LaurentPoly) -> "TPoly":
        return TPoly([c * x for x in self.coeffs])

    def exact_divide(self, divisor: "TPoly") -> Optional["TPoly"]:
        """
        Quotient when divisor divides self exactly, else None.

        The divisor's leading coefficient must be a unit monomial (+-u^k), which
        holds for every product of factors (1 - u^e T^b).
        """
        if divisor.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        lead = divisor.coeffs[-1]
        if not lead.is_monomial() or lead.leading_coefficient() not in (1, -1):
            raise ValueError(f"leading coefficient {lead} is not a unit")
        lead_inv = lead**-1
        remainder = list(self.coeffs)
        d = divisor.degree()
        if len(remainder) - 1 < d:
            return TPoly() if self.is_zero() else None
        quotient = [_ZERO] * (len(remainder) - d)
        for k in range(len(remainder) - 1, d - 1, -1):
            c = remainder[k]
            if c.is_zero():
                continue
            q = c * lead_inv
            quotient[k - d] = q
            for i, dc in enumerate(divisor.coeffs):
                if not dc.is_zero():
                    remainder[k - d + i] = remainder[k - d + i] - q * dc
        if any(not c.is_zero() for c in remainder[:d]):
            return None
        return TPoly(quotient)

    def truncated_series(self, depth: int) -> list[LaurentPoly]:
        """Coefficients of T^0..T^depth."""
        return [self.coefficient(k) for k in range(depth + 1)]
