"""Zeta expressions: sums of geometric terms with a canonical single-fraction normal form."""

from __future__ import annotations

import logging
from collections import Counter, defaultdict
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from math import gcd
from typing import Iterable, Union

from sympy import Symbol, cyclotomic_poly, divisors

from motivic_zeta.vpoly import LaurentPoly, MotClass
from motivic_zeta.zeta.models import DenomFactor, GeomTerm
from motivic_zeta.zeta.tpoly import TPoly

logger = logging.getLogger(__name__)

_Y = Symbol("y")


@lru_cache(maxsize=None)
def _piece_coeffs(j: int) -> tuple[int, ...]:
    """Coefficients (lowest first) of psi_j(y): 1 - y for j = 1, the cyclotomic Phi_j(y) else.

    With this sign choice 1 - y^k is exactly the product of psi_j over j | k.
    """
    if j == 1:
        return (1, -1)
    coeffs = cyclotomic_poly(j, _Y, polys=True).all_coeffs()
    return tuple(int(c) for c in reversed(coeffs))


def _piece_poly(a0: int, b0: int, j: int) -> TPoly:
    """psi_j(y) with y = L^a0 T^b0, as a polynomial in T."""
    coeffs = [LaurentPoly.zero()] * (b0 * (len(_piece_coeffs(j)) - 1) + 1)
    for i, c in enumerate(_piece_coeffs(j)):
        coeffs[b0 * i] = LaurentPoly.monomial(2 * a0 * i, c)
    return TPoly(coeffs)


def _primitive(f: DenomFactor) -> tuple[int, int, int]:
    """Split (a, b) as k * (a0, b0) with gcd(a0, b0) = 1."""
    k = gcd(f.a, f.b)
    return f.a // k, f.b // k, k


def _factor_poly(f: DenomFactor) -> TPoly:
    return TPoly.one_minus(2 * f.a, f.b)


@dataclass(frozen=True)
class NormalForm:
    """
    numerator / prod (1 - L^a T^b)^m.

    Args:
        numerator: polynomial in T with class coefficients
        denominator: distinct factors with positive multiplicities, in (a/b, b, a) order
    """

    numerator: TPoly
    denominator: tuple[tuple[DenomFactor, int], ...] = ()

    def is_zero(self) -> bool:
        return self.numerator.is_zero()

    def multiplicities(self) -> dict[DenomFactor, int]:
        return dict(self.denominator)

    def denominator_poly(self) -> TPoly:
        return TPoly.product(_factor_power(f, m) for f, m in self.denominator)

    def as_expr(self) -> "ZetaExpr":
        """Re-read the normal form as a ZetaExpr, one term per numerator monomial."""
        denom = tuple(f for f, m in self.denominator for _ in range(m))
        return ZetaExpr(
            tuple(GeomTerm(MotClass(c), k, denom) for k, c in self.numerator.items())
        )

    def render(self) -> str:
        if self.is_zero():
            return "0"
        numer = " + ".join(f"[{c.render()}]*T^{k}" for k, c in self.numerator.items())
        if not self.denominator:
            return f"({numer})"
        denom = "*".join(
            f.render() if m == 1 else f"{f.render()}^{m}" for f, m in self.denominator
        )
        return f"({numer}) / ({denom})"


def _factor_power(f: DenomFactor, m: int) -> TPoly:
    result = TPoly.one()
    for _ in range(m):
        result = result * _factor_poly(f)
    return result


def _cover(terms: Iterable[GeomTerm]) -> Counter:
    cover: Counter = Counter()
    for term in terms:
        cover |= term.factor_counts()
    return cover


def _reduce(numerator: TPoly, cover: Counter) -> NormalForm:
    """Cancel redundant cyclotomic pieces per pole and re-cover with whole factors."""
    piece_exps: dict[tuple[int, int], Counter] = defaultdict(Counter)
    for f, m in cover.items():
        a0, b0, k = _primitive(f)
        for j in divisors(k):
            piece_exps[(a0, b0)][j] += m

    denominator: list[tuple[DenomFactor, int]] = []
    for (a0, b0) in sorted(piece_exps, key=lambda p: (Fraction(p[0], p[1]), p[1], p[0])):
        required: dict[int, int] = {}
        for j in sorted(piece_exps[(a0, b0)]):
            exponent = piece_exps[(a0, b0)][j]
            piece = _piece_poly(a0, b0, j)
            while exponent > 0:
                quotient = numerator.exact_divide(piece)
                if quotient is None:
                    break
                numerator = quotient
                exponent -= 1
            if exponent > 0:
                required[j] = exponent

        chosen: dict[int, int] = {}
        for k in sorted(required, reverse=True):
            covered = sum(m for kk, m in chosen.items() if kk % k == 0)
            if required[k] > covered:
                chosen[k] = required[k] - covered

        # pad the numerator with the pieces the whole factors add beyond what is required
        supplied: Counter = Counter()
        for k, m in chosen.items():
            for j in divisors(k):
                supplied[j] += m
        for j, m in supplied.items():
            extra = m - required.get(j, 0)
            for _ in range(extra):
                numerator = numerator * _piece_poly(a0, b0, j)

        for k in sorted(chosen):
            denominator.append((DenomFactor(k * a0, k * b0), chosen[k]))

    denominator.sort(key=lambda fm: fm[0].sort_key())
    return NormalForm(numerator, tuple(denominator))


def compute_normal_form(terms: tuple[GeomTerm, ...]) -> NormalForm:
    if not terms:
        return NormalForm(TPoly())
    cover = _cover(terms)
    numerator = TPoly()
    for term in terms:
        missing = cover - term.factor_counts()
        part = TPoly.monomial(term.tpow, term.coeff.poly)
        for f, m in sorted(missing.items(), key=lambda fm: fm[0].sort_key()):
            part = part * _factor_power(f, m)
        numerator = numerator + part
    if numerator.is_zero():
        return NormalForm(TPoly())
    logger.debug(f"Reducing {len(terms)} terms over a cover of {sum(cover.values())} factors")
    return _reduce(numerator, cover)


@dataclass(frozen=True, eq=False)
class ZetaExpr:
    """
    Formal sum of GeomTerms.

    Equality and hashing go through the canonical normal form, which is
    computed lazily and cached on the instance.
    """

    terms: tuple[GeomTerm, ...] = ()

    @classmethod
    def zero(cls) -> "ZetaExpr":
        return cls(())

    @classmethod
    def term(
        cls,
        coeff: Union[MotClass, int],
        tpow: int,
        denom: Iterable[Union[DenomFactor, tuple[int, int]]] = (),
    ) -> "ZetaExpr":
        factors = tuple(f if isinstance(f, DenomFactor) else DenomFactor(*f) for f in denom)
        return cls((GeomTerm(MotClass.of(coeff), tpow, factors),))

    @cached_property
    def normal_form(self) -> NormalForm:
        return compute_normal_form(self.terms)

    def is_zero(self) -> bool:
        return self.normal_form.is_zero()

    def __add__(self, other: "ZetaExpr") -> "ZetaExpr":
        if not isinstance(other, ZetaExpr):
            return NotImplemented
        return ZetaExpr(self.terms + other.terms)

    def __neg__(self) -> "ZetaExpr":
        return self.scale(MotClass.of(-1))

    def __sub__(self, other: "ZetaExpr") -> "ZetaExpr":
        return self + (-other)

    def scale(self, c: Union[MotClass, int]) -> "ZetaExpr":
        c = MotClass.of(c)
        return ZetaExpr(tuple(GeomTerm(t.coeff * c, t.tpow, t.denom) for t in self.terms))

    def __eq__(self, other) -> bool:
        if not isinstance(other, ZetaExpr):
            return NotImplemented
        return self.normal_form == other.normal_form

    def __hash__(self) -> int:
        return hash(self.normal_form)

    def render(self) -> str:
        return self.normal_form.render()

    def __repr__(self) -> str:
        return f"ZetaExpr({self.render()})"


def zadd(x: ZetaExpr, y: ZetaExpr) -> ZetaExpr:
    return x + y


def zscale(x: ZetaExpr, c: Union[MotClass, int]) -> ZetaExpr:
    return x.scale(c)


def normal_form(x: ZetaExpr) -> NormalForm:
    return x.normal_form


def series_expand(x: ZetaExpr, depth: int) -> list[MotClass]:
    """Coefficients of T^1..T^depth from the term-wise geometric expansions."""
    if depth < 1:
        raise ValueError(f"series depth must be positive, got {depth}")
    total = [LaurentPoly.zero()] * (depth + 1)
    for term in x.terms:
        if term.tpow > depth:
            continue
        series = [LaurentPoly.zero()] * (depth + 1)
        series[term.tpow] = term.coeff.poly
        for f in term.denom:
            # multiply by sum_j u^(2aj) T^(bj)
            expanded = list(series)
            for k in range(depth + 1 - f.b):
                if series[k].is_zero():
                    continue
                step = 1
                while k + step * f.b <= depth:
                    idx = k + step * f.b
                    expanded[idx] = expanded[idx] + series[k].shift(2 * f.a * step)
                    step += 1
            series = expanded
        total = [a + b for a, b in zip(total, series)]
    return [MotClass(c) for c in total[1:]]


def constant_term(x: ZetaExpr) -> MotClass:
    """Coefficient of T^0."""
    return MotClass(sum((t.coeff.poly for t in x.terms if t.tpow == 0), LaurentPoly.zero()))


def rescale_T(x: ZetaExpr, m: int) -> ZetaExpr:
    """Substitute T -> L^m T."""
    return ZetaExpr(
        tuple(
            GeomTerm(t.coeff.times_lefschetz(m * t.tpow), t.tpow, tuple(f.shifted(m) for f in t.denom))
            for t in x.terms
        )
    )


def theta(x: ZetaExpr) -> ZetaExpr:
    """Euler operator T d/dT, closed in the GeomTerm alphabet."""
    terms: list[GeomTerm] = []
    for t in x.terms:
        if t.tpow:
            terms.append(GeomTerm(t.coeff * t.tpow, t.tpow, t.denom))
        for f in t.denom:
            terms.append(
                GeomTerm(
                    t.coeff.times_lefschetz(f.a) * f.b,
                    t.tpow + f.b,
                    t.denom + (f,),
                )
            )
    return ZetaExpr(tuple(terms))


def termwise_pole_counts(x: ZetaExpr) -> dict[Fraction, int]:
    """For each q, the largest number of factors with ratio q inside a single term."""
    counts: dict[Fraction, int] = {}
    for t in x.terms:
        per_term = Counter(f.pole for f in t.denom)
        for q, n in per_term.items():
            counts[q] = max(counts.get(q, 0), n)
    return counts


def denominator_pole_counts(nf: NormalForm) -> dict[Fraction, int]:
    counts: dict[Fraction, int] = defaultdict(int)
    for f, m in nf.denominator:
        counts[f.pole] += m
    return dict(counts)

