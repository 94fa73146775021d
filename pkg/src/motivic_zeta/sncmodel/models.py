"""Combinatorial data of an snc-model: components, stratum pieces, skeleta."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Dict, FrozenSet, List, Mapping, Optional, Tuple

from motivic_zeta.vpoly import MotClass


class ModelError(Exception):
    """Base exception for snc-model errors."""
    pass


class ModelParseError(ModelError):
    """Raised when model input does not match the model schema or class grammar."""
    pass


class ModelValidationError(ModelError):
    """Raised when an operation needs a valid model and validation failed."""

    def __init__(self, diagnostics: List[str]):
        super().__init__("invalid model: " + "; ".join(diagnostics))
        self.diagnostics = diagnostics


class MissingFacetsError(ModelError):
    """Raised by topology operations on models without facet incidences."""
    pass


class InconsistentCoverError(ModelError):
    """Raised when a cover class has Euler characteristic not divisible by N."""
    pass


class WeightError(ModelError):
    """Raised when barycentric weights violate sum w_j N_j = 1."""
    pass


class UnsupportedBlowupError(ModelError):
    """Raised for blow-ups outside the supported equal-multiplicity case."""
    pass


@dataclass(frozen=True)
class Component:
    """
    Irreducible component E_i of the special fiber.

    Args:
        id: component identifier
        N: multiplicity of E_i in the special fiber
        nu: coefficient of E_i in div(omega), log convention
    """

    id: str
    N: int
    nu: int

    @property
    def ratio(self) -> Fraction:
        return Fraction(self.nu, self.N)


@dataclass(frozen=True)
class StratumPiece:
    """
    Connected piece of the open stratum E_J^o, i.e. one face of the dual complex.

    Args:
        id: piece identifier
        J: component ids meeting along the piece
        tilde_class: class of the cover over this piece
        facets: for each j in J (|J| >= 2), the piece of J minus j containing it
        repeated: ids listed more than once in the input index set
    """

    id: str
    J: FrozenSet[str]
    tilde_class: MotClass
    facets: Optional[Tuple[Tuple[str, str], ...]] = None
    repeated: Tuple[str, ...] = ()

    def __post_init__(self):
        if self.facets is not None and isinstance(self.facets, Mapping):
            object.__setattr__(self, "facets", tuple(sorted(self.facets.items())))

    def facet(self, j: str) -> str:
        """Piece id of the face opposite to component j."""
        if self.facets is None:
            raise MissingFacetsError(f"piece {self.id} has no facet incidences")
        return dict(self.facets)[j]

    def facet_map(self) -> Dict[str, str]:
        return dict(self.facets or ())

    @property
    def size(self) -> int:
        return len(self.J)

    def ordered_J(self) -> Tuple[str, ...]:
        return tuple(sorted(self.J))


@dataclass(frozen=True)
class SncModelData:
    """
    Combinatorial shadow of an snc-model of a Calabi-Yau variety.

    Args:
        name: model name
        dim: dimension n of the generic fiber
        components: irreducible components with (N, nu)
        pieces: stratum pieces, one per face of the dual complex
    """

    name: str
    dim: int
    components: Tuple[Component, ...]
    pieces: Tuple[StratumPiece, ...]

    def component(self, comp_id: str) -> Component:
        for c in self.components:
            if c.id == comp_id:
                return c
        raise KeyError(comp_id)

    def piece(self, piece_id: str) -> StratumPiece:
        for p in self.pieces:
            if p.id == piece_id:
                return p
        raise KeyError(piece_id)

    def component_map(self) -> Dict[str, Component]:
        return {c.id: c for c in self.components}

    def piece_map(self) -> Dict[str, StratumPiece]:
        return {p.id: p for p in self.pieces}

    def N_J(self, J) -> int:
        comps = self.component_map()
        result = 0
        for j in J:
            result = gcd(result, comps[j].N)
        return result

    @property
    def has_facets(self) -> bool:
        return all(p.facets is not None for p in self.pieces if p.size >= 2)

    def ratios(self) -> Dict[str, Fraction]:
        return {c.id: c.ratio for c in self.components}


@dataclass
class Skeleton:
    """
    Essential skeleton: faces of the dual complex where all ratios nu/N are minimal.

    Args:
        model_name: name of the source model
        dim: dimension of the generic fiber
        vertices: component ids with minimal ratio
        faces: pieces whose index sets lie in the vertex set
        weights: weight value nu_i/N_i + 1 at every vertex
        min_weight: minimum of the weight function
        has_facets: whether face incidences are available
    """

    model_name: str
    dim: int
    vertices: List[str]
    faces: List[StratumPiece]
    weights: Dict[str, Fraction] = field(default_factory=dict)
    min_weight: Fraction = Fraction(1)
    has_facets: bool = True

    @property
    def delta(self) -> int:
        return max(p.size for p in self.faces) - 1

    def faces_of_size(self, size: int) -> List[StratumPiece]:
        return [p for p in self.faces if p.size == size]
