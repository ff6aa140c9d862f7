"""Common shape of a generated reduction instance."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from ..errors import FormatError
from ..formats import graph_from_dict, graph_to_dict
from ..graph import Graph, VertexWeightedGraph


@dataclass(frozen=True)
class Provenance:
    """Where a gadget vertex came from: a role tag plus its source object
    (variable, clause, or index) rendered as text."""

    vertex: int
    role: str
    source: str


@dataclass(frozen=True)
class GadgetInstance:
    graph: Union[Graph, VertexWeightedGraph]
    provenance: tuple[Provenance, ...]
    params: dict

    def __post_init__(self):
        g = self.graph.graph if isinstance(self.graph, VertexWeightedGraph) \
            else self.graph
        covered = sorted(p.vertex for p in self.provenance)
        if covered != list(range(g.n)):
            raise ValueError("provenance must cover every vertex exactly once")

    def base_graph(self) -> Graph:
        return self.graph.graph if isinstance(self.graph, VertexWeightedGraph) \
            else self.graph

    def vertices_with_role(self, role: str) -> list[int]:
        return [p.vertex for p in self.provenance if p.role == role]

    def vertex_by_source(self, role: str, source: str) -> int:
        for p in self.provenance:
            if p.role == role and p.source == source:
                return p.vertex
        raise KeyError(f"no vertex with role={role!r} source={source!r}")


def gadget_to_dict(gi: GadgetInstance) -> dict:
    doc = graph_to_dict(gi.graph)
    doc["provenance"] = [{"vertex": p.vertex, "role": p.role, "source": p.source}
                         for p in gi.provenance]
    doc["params"] = gi.params
    return doc


def gadget_from_dict(doc: dict) -> GadgetInstance:
    if not isinstance(doc, dict) or "provenance" not in doc or "params" not in doc:
        raise FormatError("gadget document needs 'provenance' and 'params'")
    graph = graph_from_dict(doc)
    try:
        prov = tuple(Provenance(p["vertex"], p["role"], p["source"])
                     for p in doc["provenance"])
        return GadgetInstance(graph, prov, doc["params"])
    except (KeyError, TypeError, ValueError) as exc:
        raise FormatError(str(exc)) from exc
