"""Candidate poles and exact pole-order certification in Q(v)."""

from __future__ import annotations

import logging
from fractions import Fraction
from math import gcd
from typing import Sequence, Union

from motivic_zeta.vpoly import RatFunc
from motivic_zeta.zeta.expr import ZetaExpr, denominator_pole_counts, termwise_pole_counts
from motivic_zeta.zeta.models import PoleEntry, PoleError, PoleReport

logger = logging.getLogger(__name__)

PoleTarget = Union[Fraction, tuple[int, int], str]


def parse_pole(q: PoleTarget) -> Fraction:
    """
    Normalize a pole target.

    Tuples (a, b) and strings "a/b" must already be in lowest terms with b >= 1.

    Raises:
        PoleError: If the target is not a reduced rational
    """
    if isinstance(q, Fraction):
        return q
    if isinstance(q, int):
        return Fraction(q)
    if isinstance(q, str):
        text = q.strip()
        try:
            if "/" in text:
                a_text, b_text = text.split("/", 1)
                a, b = int(a_text), int(b_text)
            else:
                a, b = int(text), 1
        except ValueError:
            raise PoleError(f"not a rational number: '{q}'") from None
    else:
        a, b = q
    if b < 1:
        raise PoleError(f"denominator must be positive in {a}/{b}")
    if gcd(a, b) != 1:
        raise PoleError(f"{a}/{b} is not in reduced form")
    return Fraction(a, b)


def candidate_poles(x: ZetaExpr) -> dict[Fraction, int]:
    """
    Upper pole orders for every candidate q.

    The order at q is the smaller of the normal-form multiplicity and the
    largest count of factors with ratio q in a single term.
    """
    from_denominator = denominator_pole_counts(x.normal_form)
    from_terms = termwise_pole_counts(x)
    poles = {}
    for q, m in from_denominator.items():
        order = min(m, from_terms.get(q, 0))
        if order > 0:
            poles[q] = order
    return dict(sorted(poles.items()))


def _root_multiplicity(coeffs: Sequence[RatFunc], root: RatFunc) -> int:
    """Multiplicity of T = root in sum coeffs[k] T^k by repeated synthetic division."""
    coeffs = list(coeffs)
    while coeffs and coeffs[-1].is_zero():
        coeffs.pop()
    if not coeffs:
        raise PoleError("root multiplicity of the zero polynomial")
    multiplicity = 0
    while len(coeffs) > 1:
        quotient = [RatFunc.zero()] * (len(coeffs) - 1)
        acc = coeffs[-1]
        for k in range(len(coeffs) - 2, -1, -1):
            quotient[k] = acc
            acc = coeffs[k] + root * acc
        if not acc.is_zero():
            break
        multiplicity += 1
        coeffs = quotient
    return multiplicity


def certify_pole_order(x: ZetaExpr, q: PoleTarget) -> tuple[int, int]:
    """
    Certified lower and upper pole orders at q = a/b.

    Classes are specialized along u = v^b, so that T = v^(-2a) is the point where
    exactly the factors with ratio q vanish; the lower order is the difference
    of root multiplicities of denominator and numerator there.

    Returns:
        (lower, upper)

    Raises:
        PoleError: If q is not in reduced form
    """
    q = parse_pole(q)
    nf = x.normal_form
    if nf.is_zero():
        return (0, 0)
    upper = candidate_poles(x).get(q, 0)
    a, b = q.numerator, q.denominator
    root = RatFunc.monomial(-2 * a)
    numerator = [RatFunc.from_laurent(c.substitute_power(b)) for c in nf.numerator.coeffs]
    denominator = [
        RatFunc.from_laurent(c.substitute_power(b)) for c in nf.denominator_poly().coeffs
    ]
    lower = max(0, _root_multiplicity(denominator, root) - _root_multiplicity(numerator, root))
    logger.debug(f"Pole {q}: lower={lower} upper={upper}")
    return (lower, upper)


def pole_report(x: ZetaExpr) -> PoleReport:
    """Certify every candidate pole of x."""
    entries = []
    for q, upper in candidate_poles(x).items():
        lower, _ = certify_pole_order(x, q)
        entries.append(PoleEntry(q=q, upper=upper, lower=lower))
    return PoleReport(entries)
