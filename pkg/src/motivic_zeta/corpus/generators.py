"""Parameterized model families."""

from typing import Callable, Dict, Optional

from motivic_zeta.config import get_settings
from motivic_zeta.sncmodel.models import Component, ModelParseError, SncModelData, StratumPiece
from motivic_zeta.vpoly import MotClass


def kodaira_In(n: int) -> SncModelData:
    """
    Neron n-gon: a cycle of n rational curves, all with N = 1 and nu = 0.

    Open components are G_m (class L - 1), intersection points have class 1.
    """
    if n < 2:
        raise ModelParseError(f"kodaira_In needs n >= 2, got {n}")
    components = tuple(Component(f"C{k}", 1, 0) for k in range(n))
    pieces = [
        StratumPiece(f"C{k}_o", frozenset({f"C{k}"}), MotClass.lefschetz() - 1)
        for k in range(n)
    ]
    for k in range(n):
        a, b = f"C{k}", f"C{(k + 1) % n}"
        pieces.append(
            StratumPiece(
                id=f"P{k}",
                J=frozenset({a, b}),
                tilde_class=MotClass.one(),
                facets={a: f"{b}_o", b: f"{a}_o"},
            )
        )
    return SncModelData(
        name=f"kodaira_I{n}", dim=1, components=components, pieces=tuple(pieces)
    )


GENERATORS: Dict[str, Callable[[int], SncModelData]] = {
    "kodaira_In": kodaira_In,
}


def generate(name: str, n: Optional[int] = None) -> SncModelData:
    """Instantiate a registered generator; n defaults to analysis.kodaira_n."""
    if name not in GENERATORS:
        raise ModelParseError(f"unknown generator '{name}'")
    if n is None:
        n = get_settings().analysis.kodaira_n
    return GENERATORS[name](n)
