"""Closed forms: semi-abelian zeta functions, generated oracle tables, Chevalley classes."""

from __future__ import annotations

import logging
from fractions import Fraction
from math import floor, gcd
from typing import Mapping, Union

from motivic_zeta.abelian.models import (
    AbelianInputError,
    AbelianOracleTable,
    OracleRow,
    SemiAbelianInput,
)
from motivic_zeta.vpoly import MotClass
from motivic_zeta.zeta import ZetaExpr, rescale_T, theta

logger = logging.getLogger(__name__)


def eulerian_zeta(t: int) -> ZetaExpr:
    """sum_{d >= 1} d^t T^d, as (T d/dT)^t applied to T/(1 - T)."""
    result = ZetaExpr.term(1, 1, [(0, 1)])
    for _ in range(t):
        result = theta(result)
    return result


def zeta_semiabelian(inp: SemiAbelianInput) -> ZetaExpr:
    """class0 L^(-ord) sum_d d^t T^d, rescaled by T -> L^shift T."""
    result = eulerian_zeta(inp.t).scale(inp.class0.times_lefschetz(-inp.ord))
    if inp.shift:
        result = rescale_T(result, inp.shift)
    return result


def semiabelian_table(inp: SemiAbelianInput, depth: int) -> AbelianOracleTable:
    """Oracle rows for d = 1..depth read off the closed form (e = 1, c = shift)."""
    if inp.shift < 0:
        raise AbelianInputError(f"base change conductor must be nonnegative, got {inp.shift}")
    rows = {
        d: OracleRow(cls=inp.class0 * d**inp.t, ord=Fraction(inp.shift * d - inp.ord), t=inp.t)
        for d in range(1, depth + 1)
    }
    return AbelianOracleTable(e=1, c=Fraction(inp.shift), t_pot=inp.t, rows=rows, depth=depth)


def closed_form_table(
    e: int,
    c: Union[Fraction, int, str],
    t_pot: int,
    base_classes: Mapping[int, MotClass],
    toric_ranks: Mapping[int, int],
    depth: int,
) -> AbelianOracleTable:
    """
    Table consistent with both key facts, for any e >= 1.

    Rows depend on g = gcd(d, e) only through the base class B_g and the
    toric rank t_g: class_d = (d/g)^t_g B_g, t_d = t_g and ord_d = floor(c d).

    Args:
        e: degree of the minimal extension with semi-abelian reduction
        c: base change conductor, with c * e integral
        t_pot: potential toric rank, forced as t_e
        base_classes: divisor g of e -> B_g
        toric_ranks: divisor g of e -> t_g (t_e may be omitted)
        depth: largest degree d
    """
    c = Fraction(c)
    if (c * e).denominator != 1:
        raise AbelianInputError(f"c * e must be an integer, got c={c}, e={e}")
    divisors = [g for g in range(1, e + 1) if e % g == 0]
    missing = [g for g in divisors if g not in base_classes]
    if missing:
        raise AbelianInputError(f"base classes missing for divisors {missing} of e={e}")
    ranks = dict(toric_ranks)
    ranks[e] = t_pot
    rows = {}
    for d in range(1, depth + 1):
        g = gcd(d, e)
        t_g = ranks.get(g, 0)
        rows[d] = OracleRow(cls=base_classes[g] * (d // g) ** t_g, ord=Fraction(floor(c * d)), t=t_g)
    logger.debug(f"Generated oracle table with e={e}, c={c}, depth={depth}")
    return AbelianOracleTable(e=e, c=c, t_pot=t_pot, rows=rows, depth=depth)


def chevalley_class(sharp: MotClass, u_rank: int, tau: int) -> MotClass:
    """[G] = [G^#] L^u (L - 1)^tau for unipotent rank u and toric rank tau."""
    if u_rank < 0 or tau < 0:
        raise ValueError("unipotent and toric ranks must be nonnegative")
    return sharp.times_lefschetz(u_rank) * (MotClass.lefschetz() - 1) ** tau
