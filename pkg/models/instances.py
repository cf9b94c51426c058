"""
Combinatorial sources of boolean functions: hypergraphs, edge-indexed
multigraphs, and families of rational vectors.
"""

from fractions import Fraction
from typing import Any, List, Tuple

from pydantic import BaseModel, ConfigDict, Field, field_serializer, field_validator, model_validator

from .errors import InvalidInstanceError


class Hypergraph(BaseModel):
    """Vertices 1..n and a set of nonempty hyperedges"""

    model_config = ConfigDict(frozen=True)

    n: int = Field(ge=0, description="Vertex count")
    edges: Tuple[Tuple[int, ...], ...] = Field(default_factory=tuple, description="Hyperedges as 1-based vertex lists")

    @field_validator("edges", mode="after")
    @classmethod
    def _normalize(cls, edges: Tuple[Tuple[int, ...], ...]) -> Tuple[Tuple[int, ...], ...]:
        normalized = set()
        for edge in edges:
            if not edge:
                raise InvalidInstanceError(kind="hypergraph", reason="empty hyperedge")
            normalized.add(tuple(sorted(set(edge))))
        return tuple(sorted(normalized, key=lambda e: e[::-1]))

    @model_validator(mode="after")
    def _check_vertices(self) -> "Hypergraph":
        for edge in self.edges:
            for vertex in edge:
                if vertex < 1 or vertex > self.n:
                    raise InvalidInstanceError(kind="hypergraph", reason=f"vertex {vertex} outside 1..{self.n}")
        return self

    @property
    def edge_masks(self) -> List[int]:
        return [sum(1 << (v - 1) for v in edge) for edge in self.edges]

    @classmethod
    def from_masks(cls, n: int, masks: List[int]) -> "Hypergraph":
        edges = [tuple(i + 1 for i in range(n) if m >> i & 1) for m in masks]
        return cls(n=n, edges=tuple(edges))


class MultiGraph(BaseModel):
    """A loopless multigraph whose edges are the ground set 1..n"""

    model_config = ConfigDict(frozen=True)

    vcount: int = Field(ge=0, description="Number of vertices")
    ends: Tuple[Tuple[int, int], ...] = Field(default_factory=tuple, description="Endpoints of edge i+1")

    @model_validator(mode="after")
    def _check_ends(self) -> "MultiGraph":
        for u, v in self.ends:
            if u == v:
                raise InvalidInstanceError(kind="multigraph", reason=f"loop at vertex {u}")
            if not (1 <= u <= self.vcount and 1 <= v <= self.vcount):
                raise InvalidInstanceError(kind="multigraph", reason=f"edge {u}-{v} outside 1..{self.vcount}")
        return self

    @property
    def n(self) -> int:
        return len(self.ends)


def _parse_rational(entry: Any) -> Fraction:
    if isinstance(entry, Fraction):
        return entry
    if isinstance(entry, (list, tuple)):
        if len(entry) != 2:
            raise InvalidInstanceError(kind="vector family", reason=f"bad rational {entry!r}")
        num, den = int(entry[0]), int(entry[1])
        if den == 0:
            raise InvalidInstanceError(kind="vector family", reason="zero denominator")
        return Fraction(num, den)
    try:
        return Fraction(entry)
    except (TypeError, ValueError, ZeroDivisionError):
        raise InvalidInstanceError(kind="vector family", reason=f"bad rational {entry!r}")


class VectorFamily(BaseModel):
    """Columns v_1..v_n of exact rationals in a space of dimension dim"""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    dim: int = Field(ge=0)
    columns: Tuple[Tuple[Fraction, ...], ...] = Field(default_factory=tuple)

    @field_validator("columns", mode="before")
    @classmethod
    def _parse_columns(cls, value: Any) -> Tuple[Tuple[Fraction, ...], ...]:
        return tuple(tuple(_parse_rational(entry) for entry in column) for column in value)

    @model_validator(mode="after")
    def _check_dims(self) -> "VectorFamily":
        for column in self.columns:
            if len(column) != self.dim:
                raise InvalidInstanceError(
                    kind="vector family", reason=f"column of length {len(column)} in dimension {self.dim}"
                )
        return self

    @field_serializer("columns")
    def _as_pairs(self, columns: Tuple[Tuple[Fraction, ...], ...]) -> List[List[List[str]]]:
        return [[[str(x.numerator), str(x.denominator)] for x in column] for column in columns]

    @property
    def n(self) -> int:
        return len(self.columns)
