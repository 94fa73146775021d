"""Products of (t^d - 1)^e and their cyclotomic bookkeeping."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Mapping, Set, Tuple, Union

from sympy import Poly, Symbol, cyclotomic_poly, mobius

_T = Symbol("t")


def _multiples(d: int, bound: int) -> range:
    return range(d, bound + 1, d)


@dataclass(frozen=True)
class CycloProduct:
    """
    prod_d (t^d - 1)^e_d, stored as sorted (d, e_d) pairs without zero exponents.

    Accepts a mapping d -> e_d at construction.
    """

    factors: Tuple[Tuple[int, int], ...] = ()

    def __post_init__(self):
        items = self.factors.items() if isinstance(self.factors, Mapping) else self.factors
        cleaned = tuple(sorted((int(d), int(e)) for d, e in items if e != 0))
        for d, _ in cleaned:
            if d < 1:
                raise ValueError(f"cyclotomic index must be positive, got {d}")
        object.__setattr__(self, "factors", cleaned)

    @classmethod
    def of(cls, exps: Union[Mapping[int, int], "CycloProduct"]) -> "CycloProduct":
        return exps if isinstance(exps, CycloProduct) else cls(dict(exps))

    @property
    def exps(self) -> Dict[int, int]:
        return dict(self.factors)

    def is_one(self) -> bool:
        return not self.factors

    def __mul__(self, other: "CycloProduct") -> "CycloProduct":
        if not isinstance(other, CycloProduct):
            return NotImplemented
        merged = self.exps
        for d, e in other.factors:
            merged[d] = merged.get(d, 0) + e
        return CycloProduct(merged)

    def __truediv__(self, other: "CycloProduct") -> "CycloProduct":
        if not isinstance(other, CycloProduct):
            return NotImplemented
        return self * CycloProduct({d: -e for d, e in other.factors})

    def degree(self) -> int:
        """sum_d d e_d, the degree of the rational function in t."""
        return sum(d * e for d, e in self.factors)

    def polynomials(self) -> Tuple[Poly, Poly]:
        """Numerator and denominator over Z[t]."""
        num = Poly(1, _T)
        den = Poly(1, _T)
        for d, e in self.factors:
            base = Poly(_T**d - 1, _T)
            if e > 0:
                num = num * base**e
            else:
                den = den * base ** (-e)
        return num, den

    def render(self, var: str = "t") -> str:
        if not self.factors:
            return "1"
        parts = []
        for d, e in self.factors:
            base = f"({var} - 1)" if d == 1 else f"({var}^{d} - 1)"
            parts.append(base if e == 1 else f"{base}^{e}")
        return "*".join(parts)

    def __str__(self) -> str:
        return self.render()


def cyclotomic_multiplicities(z: CycloProduct) -> Dict[int, int]:
    """c_m = sum of e_d over the multiples d of m, zeros omitted."""
    exps = z.exps
    if not exps:
        return {}
    bound = max(exps)
    result = {}
    for m in range(1, bound + 1):
        c = sum(exps.get(d, 0) for d in _multiples(m, bound))
        if c:
            result[m] = c
    return result


def certified_eigenvalues(z: CycloProduct) -> Set[int]:
    """Orders m whose primitive roots of unity are certainly monodromy eigenvalues."""
    return set(cyclotomic_multiplicities(z))


def from_cyclotomic(multiplicities: Mapping[int, int]) -> CycloProduct:
    """Invert cyclotomic_multiplicities: e_d = sum over multiples k of d of mu(k/d) c_k."""
    cm = {m: c for m, c in multiplicities.items() if c}
    if not cm:
        return CycloProduct()
    bound = max(cm)
    return CycloProduct(
        {
            d: sum(int(mobius(k // d)) * cm.get(k, 0) for k in _multiples(d, bound))
            for d in range(1, bound + 1)
        }
    )


def cyclotomic_polynomials(multiplicities: Mapping[int, int]) -> Tuple[Poly, Poly]:
    """prod_m Phi_m(t)^c_m as numerator and denominator over Z[t]."""
    num = Poly(1, _T)
    den = Poly(1, _T)
    for m, c in multiplicities.items():
        phi = Poly(cyclotomic_poly(m, _T), _T)
        if c > 0:
            num = num * phi**c
        elif c < 0:
            den = den * phi ** (-c)
    return num, den


def factorization_holds(z: CycloProduct) -> bool:
    """Check prod (t^d - 1)^e_d == prod Phi_m^c_m as an identity of rational functions."""
    num, den = z.polynomials()
    cnum, cden = cyclotomic_polynomials(cyclotomic_multiplicities(z))
    return num * cden == cnum * den
