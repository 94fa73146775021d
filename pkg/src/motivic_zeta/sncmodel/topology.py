"""Rational homology and pseudo-manifold checks on the dual complex."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple, Union

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from motivic_zeta.sncmodel.models import MissingFacetsError, Skeleton, SncModelData, StratumPiece
from motivic_zeta.sncmodel.skeleton import essential_skeleton
from motivic_zeta.sncmodel.validate import require_valid


@dataclass
class PseudoManifoldReport:
    """Pseudo-manifold properties of a skeleton, with boundary witnesses."""

    connected: bool
    pure: bool
    max_two_cofaces: bool
    boundary: List[str] = field(default_factory=list)
    overfull: List[str] = field(default_factory=list)

    @property
    def closed(self) -> bool:
        return self.pure and self.max_two_cofaces and not self.boundary

    def to_dict(self) -> dict:
        return {
            "connected": self.connected,
            "pure": self.pure,
            "max_two_cofaces": self.max_two_cofaces,
            "closed": self.closed,
            "boundary": list(self.boundary),
        }


@dataclass
class KulikovClassification:
    """Type of a semistable degeneration of surfaces read off the skeleton."""

    kind: str
    delta: int
    shape_consistent: bool


def _require_facets(faces: Sequence[StratumPiece]) -> None:
    missing = [p.id for p in faces if p.size >= 2 and p.facets is None]
    if missing:
        raise MissingFacetsError(
            f"facet incidences required for topology, missing on pieces {', '.join(missing)}"
        )


def _faces_of(target: Union[SncModelData, Skeleton]) -> List[StratumPiece]:
    if isinstance(target, Skeleton):
        return list(target.faces)
    require_valid(target)
    return list(target.pieces)


def _rank(rows: List[List[int]]) -> int:
    if not rows or not rows[0]:
        return 0
    return DomainMatrix.from_list(rows, QQ).rank()


def _boundary_matrix(
    cells: Sequence[StratumPiece], faces: Sequence[StratumPiece]
) -> List[List[int]]:
    """Matrix of the boundary map from cells to their codim-1 faces."""
    row_of = {p.id: i for i, p in enumerate(faces)}
    matrix = [[0] * len(cells) for _ in faces]
    for col, cell in enumerate(cells):
        for sign_index, j in enumerate(cell.ordered_J()):
            row = row_of[cell.facet(j)]
            matrix[row][col] += -1 if sign_index % 2 else 1
    return matrix


def dual_complex_homology(target: Union[SncModelData, Skeleton]) -> Tuple[int, ...]:
    """
    Rational Betti numbers of the dual complex (or a skeleton) as a Delta-complex.

    Raises:
        MissingFacetsError: If face incidences are missing
    """
    faces = _faces_of(target)
    _require_facets(faces)
    top = max(p.size for p in faces) - 1
    by_dim: Dict[int, List[StratumPiece]] = {
        k: sorted((p for p in faces if p.size == k + 1), key=lambda p: p.id) for k in range(top + 1)
    }
    ranks = {0: 0, top + 1: 0}
    for k in range(1, top + 1):
        ranks[k] = _rank(_boundary_matrix(by_dim[k], by_dim[k - 1]))
    return tuple(len(by_dim[k]) - ranks[k] - ranks[k + 1] for k in range(top + 1))


def pseudo_manifold_check(skeleton: Skeleton) -> PseudoManifoldReport:
    """Connectivity, purity and codim-1 coface counts of a skeleton."""
    faces = list(skeleton.faces)
    _require_facets(faces)
    by_id = {p.id: p for p in faces}
    top = skeleton.delta

    # union-find over cells joined to their facets
    parent = {p.id: p.id for p in faces}

    def find(x: str) -> str:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for p in faces:
        for target in p.facet_map().values():
            parent[find(p.id)] = find(target)
    connected = len({find(p.id) for p in faces}) == 1

    covered = set()
    stack = [p.id for p in faces if p.size == top + 1]
    while stack:
        current = stack.pop()
        if current in covered:
            continue
        covered.add(current)
        stack.extend(by_id[current].facet_map().values())
    pure = covered == set(by_id)

    cofaces = {p.id: 0 for p in faces if p.size == top}
    for p in faces:
        if p.size == top + 1:
            for target in p.facet_map().values():
                cofaces[target] += 1
    boundary = sorted(fid for fid, n in cofaces.items() if n == 1)
    overfull = sorted(fid for fid, n in cofaces.items() if n > 2)
    return PseudoManifoldReport(
        connected=connected,
        pure=pure,
        max_two_cofaces=not overfull,
        boundary=boundary,
        overfull=overfull,
    )


def kulikov_type(model: SncModelData) -> Optional[KulikovClassification]:
    """
    Type I/II/III of a semistable degeneration of surfaces, from delta = 0/1/2.

    The shape check asks for a point, an interval with two boundary vertices,
    or a closed pseudo-manifold with the rational homology of the sphere.
    Returns None for models that are not semistable surfaces or lack facets.
    """
    if model.dim != 2 or any(c.N != 1 for c in model.components) or not model.has_facets:
        return None
    skeleton = essential_skeleton(model)
    delta = skeleton.delta
    betti = dual_complex_homology(skeleton)
    report = pseudo_manifold_check(skeleton)
    if delta == 0:
        consistent = len(skeleton.vertices) == 1 and betti == (1,)
    elif delta == 1:
        consistent = betti == (1, 0) and report.pure and len(report.boundary) == 2
    else:
        consistent = betti == (1, 0, 1) and report.closed
    return KulikovClassification(
        kind={0: "I", 1: "II", 2: "III"}[delta],
        delta=delta,
        shape_consistent=consistent and report.connected,
    )
