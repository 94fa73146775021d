"""Consistency checks and truncated expansion for oracle tables."""

from __future__ import annotations

import logging
from fractions import Fraction
from math import gcd
from typing import Iterator, List, Optional, Tuple

from motivic_zeta.abelian.models import (
    AbelianOracleTable,
    GranularityError,
    OracleRow,
    TruncatedSeries,
)
from motivic_zeta.vpoly import LaurentPoly, MotClass
from motivic_zeta.zeta.models import format_rational

logger = logging.getLogger(__name__)


def _ord_text(q: Fraction) -> str:
    return format_rational(q)


def related_by_progression(tab: AbelianOracleTable) -> Iterator[Tuple[int, int, int]]:
    """Pairs (m, n, q) of present degrees with n = m + q e, q >= 1."""
    degrees = tab.degrees()
    for m in degrees:
        for n in degrees:
            if n > m and (n - m) % tab.e == 0:
                yield m, n, (n - m) // tab.e


def related_by_base_change(tab: AbelianOracleTable) -> Iterator[Tuple[int, int]]:
    """Pairs (m, d), d >= 2, with m and m d present and d prime to e / gcd(m, e)."""
    present = set(tab.rows)
    for m in tab.degrees():
        e_prime = tab.e // gcd(m, tab.e)
        d = 2
        while m * d <= max(present):
            if m * d in present and gcd(d, e_prime) == 1:
                yield m, d
            d += 1


def validate_oracle_table(tab: AbelianOracleTable) -> List[str]:
    """
    Check every pair of rows related by one of the two key facts.

    ord_A(m + q e) = ord_A(m) + c e q, and [A(m d)] = d^t(A(m)) [A(m)] with
    equal toric ranks when d is prime to e / gcd(m, e). Row-wise, toric ranks
    are bounded by t_pot and equal to it once e divides d, and e ord_d is integral.

    Returns:
        Diagnostics, empty when the table is consistent
    """
    problems: List[str] = []
    if tab.c < 0:
        problems.append(f"base change conductor must be nonnegative, got {_ord_text(tab.c)}")
    if tab.t_pot < 0:
        problems.append(f"potential toric rank must be nonnegative, got {tab.t_pot}")

    for d in tab.degrees():
        row = tab.rows[d]
        if (row.ord * tab.e).denominator != 1:
            problems.append(f"d={d}: ord {_ord_text(row.ord)} is not in (1/{tab.e})Z")
        if row.t < 0 or row.t > tab.t_pot:
            problems.append(f"d={d}: toric rank {row.t} outside [0, t_pot={tab.t_pot}]")
        if d % tab.e == 0 and row.t != tab.t_pot:
            problems.append(f"d={d}: toric rank {row.t} differs from t_pot={tab.t_pot} though e divides d")

    for m, n, q in related_by_progression(tab):
        expected = tab.rows[m].ord + tab.c * tab.e * q
        if tab.rows[n].ord != expected:
            problems.append(
                f"ord progression: ord_{n} = {_ord_text(tab.rows[n].ord)}, "
                f"expected ord_{m} + c*e*{q} = {_ord_text(expected)}"
            )

    for m, d in related_by_base_change(tab):
        low, high = tab.rows[m], tab.rows[m * d]
        if high.cls != low.cls * d**low.t:
            problems.append(
                f"base change: class_{m * d} = {high.cls.render()}, "
                f"expected {d}^{low.t} * class_{m} = {(low.cls * d**low.t).render()}"
            )
        if high.t != low.t:
            problems.append(f"base change: t_{m * d} = {high.t} differs from t_{m} = {low.t}")

    if problems:
        logger.info(f"Oracle table rejected with {len(problems)} diagnostics")
    return problems


def zeta_truncated(tab: AbelianOracleTable, depth: Optional[int] = None) -> TruncatedSeries:
    """
    Coefficients class_d L^(ord_d) of T^1..T^depth in the variable w = u^(1/e).

    Raises:
        MissingRowError: If a degree up to depth has no row
        GranularityError: If e * ord_d is not an integer
    """
    depth = depth or tab.depth or max(tab.rows, default=0)
    if depth < 1:
        raise ValueError(f"expansion depth must be positive, got {depth}")
    coefficients = []
    for d in range(1, depth + 1):
        row = tab.row(d)
        scaled = row.ord * tab.e
        if scaled.denominator != 1:
            raise GranularityError(
                f"d={d}: ord {_ord_text(row.ord)} is not a multiple of 1/{tab.e}"
            )
        # L = u^2 = w^(2e)
        coefficients.append(row.cls.poly.substitute_power(tab.e).shift(2 * int(scaled)))
    return TruncatedSeries(scale=tab.e, coefficients=coefficients)


def single_row_mutations(tab: AbelianOracleTable) -> Iterator[Tuple[str, AbelianOracleTable]]:
    """Every table differing from `tab` in one field of one row."""
    step = Fraction(1, tab.e)
    for d in tab.degrees():
        row = tab.rows[d]
        yield f"class_{d}", tab.with_row(d, OracleRow(row.cls + MotClass.one(), row.ord, row.t))
        yield f"class_{d}*u", tab.with_row(
            d, OracleRow(row.cls + MotClass(LaurentPoly.monomial(1)), row.ord, row.t)
        )
        yield f"ord_{d}", tab.with_row(d, OracleRow(row.cls, row.ord + step, row.t))
        bumped_t = row.t - 1 if row.t > 0 else row.t + 1
        yield f"t_{d}", tab.with_row(d, OracleRow(row.cls, row.ord, bumped_t))
