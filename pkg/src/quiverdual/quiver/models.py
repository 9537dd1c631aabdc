"""
Quivers with framed and gauge nodes, frozen edges and a superpotential.

Superpotential cycles are closed directed walks written as sequences of
edge ids in walk order: the destination of each edge is the source of the
next one, and the last edge returns to the source of the first.
"""
import json
from enum import Enum
from fractions import Fraction
from pathlib import Path
from typing import Dict, List, Optional, Tuple, Union

from pydantic import BaseModel, field_serializer, field_validator, model_validator

from quiverdual.quiver.exceptions import QuiverDefinitionError


class NodeKind(str, Enum):
    FRAMED = "framed"
    GAUGE = "gauge"


class Node(BaseModel):
    """
    A framed node (a bundle or vector space of fixed rank, drawn as a box) or
    a gauge node (a GL_rank quotient, drawn as a circle).

    Framed nodes carry a label that survives mutation and identifies them
    across quivers; gauge nodes are identified by rank and position only.
    """

    id: str
    kind: NodeKind
    rank: int
    label: Optional[str] = None

    model_config = {"frozen": True, "extra": "forbid"}

    @field_validator("rank")
    def validate_rank(cls, v: int) -> int:
        if v < 1:
            raise ValueError(f"Node ranks must be positive, got {v}")
        return v

    @model_validator(mode="after")
    def validate_label(self) -> "Node":
        if self.kind is NodeKind.FRAMED and not self.label:
            raise ValueError(f"Framed node {self.id!r} needs a label")
        return self


class Edge(BaseModel):
    """An arrow src -> dst; frozen edges are fixed sections drawn dashed."""

    id: str
    src: str
    dst: str
    frozen: bool = False

    model_config = {"frozen": True, "extra": "forbid"}


class SuperpotentialTerm(BaseModel):
    coefficient: Fraction
    cycle: Tuple[str, ...]

    model_config = {
        "frozen": True,
        "extra": "forbid",
        "arbitrary_types_allowed": True,
    }

    @field_validator("coefficient", mode="before")
    def parse_coefficient(cls, v: Union[Fraction, int, str]) -> Fraction:
        if isinstance(v, bool):
            raise ValueError("Coefficients must be rational, got a boolean")
        return Fraction(v)

    @field_validator("cycle")
    def validate_cycle(cls, v: Tuple[str, ...]) -> Tuple[str, ...]:
        if not v:
            raise ValueError("Superpotential cycles must be non-empty")
        return v

    @field_serializer("coefficient")
    def serialize_coefficient(self, coefficient: Fraction) -> str:
        return str(coefficient)


class Quiver(BaseModel):
    nodes: Tuple[Node, ...]
    edges: Tuple[Edge, ...] = ()
    superpotential: Tuple[SuperpotentialTerm, ...] = ()

    model_config = {"frozen": True, "extra": "forbid"}

    @model_validator(mode="after")
    def validate_structure(self) -> "Quiver":
        node_ids = [node.id for node in self.nodes]
        if len(set(node_ids)) != len(node_ids):
            raise ValueError(f"Node ids must be unique, got {node_ids}")
        edge_ids = [edge.id for edge in self.edges]
        if len(set(edge_ids)) != len(edge_ids):
            raise ValueError(f"Edge ids must be unique, got {edge_ids}")
        known = set(node_ids)
        for edge in self.edges:
            if edge.src not in known or edge.dst not in known:
                raise ValueError(
                    f"Edge {edge.id!r} joins unknown nodes {edge.src!r} -> {edge.dst!r}"
                )
        edges = {edge.id: edge for edge in self.edges}
        for term in self.superpotential:
            for edge_id in term.cycle:
                if edge_id not in edges:
                    raise ValueError(
                        f"Superpotential cycle {term.cycle} uses unknown edge "
                        f"{edge_id!r}"
                    )
            walk = [edges[edge_id] for edge_id in term.cycle]
            for current, following in zip(walk, walk[1:] + walk[:1]):
                if current.dst != following.src:
                    raise ValueError(
                        f"Superpotential cycle {term.cycle} is not a closed walk"
                    )
        return self

    def node(self, node_id: str) -> Node:
        for node in self.nodes:
            if node.id == node_id:
                return node
        known = [n.id for n in self.nodes]
        raise QuiverDefinitionError(f"No node {node_id!r}; nodes are {known}")

    def edge(self, edge_id: str) -> Edge:
        for edge in self.edges:
            if edge.id == edge_id:
                return edge
        known = [e.id for e in self.edges]
        raise QuiverDefinitionError(f"No edge {edge_id!r}; edges are {known}")

    @property
    def edge_map(self) -> Dict[str, Edge]:
        return {edge.id: edge for edge in self.edges}

    def gauge_nodes(self) -> List[Node]:
        return [node for node in self.nodes if node.kind is NodeKind.GAUGE]

    def frozen_edges(self) -> List[Edge]:
        return [edge for edge in self.edges if edge.frozen]

    def incoming(self, node_id: str) -> List[Edge]:
        return [edge for edge in self.edges if edge.dst == node_id]

    def outgoing(self, node_id: str) -> List[Edge]:
        return [edge for edge in self.edges if edge.src == node_id]

    def to_json(self) -> str:
        """Canonical JSON with sorted keys."""
        return json.dumps(self.model_dump(mode="json"), indent=2, sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "Quiver":
        return cls.model_validate_json(text)

    def write_to_file(self, file_path: Union[Path, str]) -> None:
        """
        Writes the quiver to a JSON file.
        """
        if isinstance(file_path, str):
            file_path = Path(file_path)

        with file_path.open("w") as file:
            file.write(self.to_json())

    @classmethod
    def read_from_file(cls, file_path: Union[Path, str]) -> "Quiver":
        """
        Reads a quiver from a JSON file.
        """
        if isinstance(file_path, str):
            file_path = Path(file_path)

        with file_path.open("r") as file:
            quiver = Quiver.model_validate_json(file.read())
        return quiver


class MutationResult(BaseModel):
    quiver: Quiver
    node: str
    new_gauge_rank: int
    added_edges: Tuple[str, ...] = ()
    reversed_edges: Tuple[str, ...] = ()
    deleted_pairs: Tuple[Tuple[str, str], ...] = ()
    added_cycles: Tuple[SuperpotentialTerm, ...] = ()
    removed_cycles: Tuple[SuperpotentialTerm, ...] = ()

    model_config = {"frozen": True, "extra": "forbid"}
