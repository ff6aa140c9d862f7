"""File formats: graph / formula / witness / gadget serialization.

All writers are deterministic (sorted keys, canonical edge order) so that
identical inputs produce byte-identical files.
"""

from __future__ import annotations

import json
from typing import Optional, Union

from .errors import FormatError
from .graph import Graph, VertexWeightedGraph

AnyGraph = Union[Graph, VertexWeightedGraph]


def _as_int_list(value, what: str) -> list[int]:
    if not isinstance(value, list) or not all(isinstance(x, int) for x in value):
        raise FormatError(f"{what} must be a list of integers")
    return value


# ---------------------------------------------------------------------------
# Graph JSON: {"n": int, "edges": [[u,v],...], "weights": [...]?, "names": [...]?}
# ---------------------------------------------------------------------------

def graph_to_dict(g: AnyGraph) -> dict:
    weights = None
    if isinstance(g, VertexWeightedGraph):
        weights = list(g.weights)
        g = g.graph
    doc: dict = {"n": g.n, "edges": [[u, v] for u, v in g.edges]}
    if weights is not None:
        doc["weights"] = weights
    if g.names is not None:
        doc["names"] = list(g.names)
    return doc


def graph_from_dict(doc: dict) -> AnyGraph:
    if not isinstance(doc, dict) or "n" not in doc or "edges" not in doc:
        raise FormatError("graph document needs 'n' and 'edges'")
    n = doc["n"]
    if not isinstance(n, int) or n < 0:
        raise FormatError("'n' must be a non-negative integer")
    edges = doc["edges"]
    if not isinstance(edges, list):
        raise FormatError("'edges' must be a list of pairs")
    pairs = []
    for e in edges:
        if not (isinstance(e, list) and len(e) == 2):
            raise FormatError(f"bad edge entry: {e!r}")
        pairs.append((e[0], e[1]))
    try:
        g = Graph(n, pairs, names=doc.get("names"))
    except ValueError as exc:
        raise FormatError(str(exc)) from exc
    if "weights" in doc:
        try:
            return VertexWeightedGraph(g, _as_int_list(doc["weights"], "'weights'"))
        except ValueError as exc:
            raise FormatError(str(exc)) from exc
    return g


def dumps_json(doc: dict) -> str:
    return json.dumps(doc, sort_keys=True, separators=(",", ": "), indent=1) + "\n"


def load_graph(path: str) -> AnyGraph:
    with open(path, "r", encoding="utf-8") as fh:
        try:
            doc = json.load(fh)
        except json.JSONDecodeError as exc:
            raise FormatError(f"invalid JSON in {path}: {exc}") from exc
    return graph_from_dict(doc)


def save_graph(path: str, g: AnyGraph) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps_json(graph_to_dict(g)))


# ---------------------------------------------------------------------------
# Edge-list text: "n m" header, one "u v" line per edge, optional "w ..." line.
# ---------------------------------------------------------------------------

def graph_to_edgelist(g: AnyGraph) -> str:
    weights = None
    if isinstance(g, VertexWeightedGraph):
        weights = g.weights
        g = g.graph
    lines = [f"{g.n} {len(g.edges)}"]
    lines += [f"{u} {v}" for u, v in g.edges]
    if weights is not None:
        lines.append("w " + " ".join(str(w) for w in weights))
    return "\n".join(lines) + "\n"


def graph_from_edgelist(text: str) -> AnyGraph:
    rows = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not rows:
        raise FormatError("empty edge-list document")
    head = rows[0].split()
    if len(head) != 2:
        raise FormatError("header must be 'n m'")
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError as exc:
        raise FormatError("header must be 'n m'") from exc
    if len(rows) < 1 + m:
        raise FormatError(f"expected {m} edge lines")
    pairs = []
    for ln in rows[1:1 + m]:
        parts = ln.split()
        if len(parts) != 2:
            raise FormatError(f"bad edge line: {ln!r}")
        pairs.append((int(parts[0]), int(parts[1])))
    weights = None
    rest = rows[1 + m:]
    if rest:
        if len(rest) != 1 or not rest[0].startswith("w "):
            raise FormatError("trailing content after edges (expected single 'w ...' line)")
        weights = [int(x) for x in rest[0].split()[1:]]
    try:
        g = Graph(n, pairs)
        return VertexWeightedGraph(g, weights) if weights is not None else g
    except ValueError as exc:
        raise FormatError(str(exc)) from exc


# ---------------------------------------------------------------------------
# DOT export (visualization only; never parsed back).
# ---------------------------------------------------------------------------

def graph_to_dot(g: AnyGraph, part: Optional[frozenset[int]] = None,
                 edge_colors: Optional[dict[tuple[int, int], str]] = None) -> str:
    """Undirected DOT text; `part` fills the chosen vertex side, `edge_colors`
    paints edges (keys in canonical (min,max) form)."""
    weights = None
    if isinstance(g, VertexWeightedGraph):
        weights = g.weights
        g = g.graph
    out = ["graph G {"]
    for v in range(g.n):
        attrs = []
        label = g.names[v] if g.names is not None else str(v)
        if weights is not None:
            label += f" ({weights[v]})"
        attrs.append(f'label="{label}"')
        if part is not None and v in part:
            attrs.append('style=filled fillcolor=lightblue')
        out.append(f"  {v} [{' '.join(attrs)}];")
    for u, v in g.edges:
        if edge_colors and (u, v) in edge_colors:
            out.append(f'  {u} -- {v} [color={edge_colors[(u, v)]}];')
        else:
            out.append(f"  {u} -- {v};")
    out.append("}")
    return "\n".join(out) + "\n"


# ---------------------------------------------------------------------------
# Witness documents (decompositions, labelings, colorings, matchings).
# ---------------------------------------------------------------------------

def labels_to_dict(labels) -> dict:
    return {"labels": list(labels)}


def labels_from_dict(doc: dict) -> list[int]:
    if not isinstance(doc, dict) or "labels" not in doc:
        raise FormatError("labeling document needs 'labels'")
    return _as_int_list(doc["labels"], "'labels'")


def colors_to_dict(colors) -> dict:
    return {"colors": list(colors)}


def colors_from_dict(doc: dict) -> list[str]:
    if not isinstance(doc, dict) or "colors" not in doc:
        raise FormatError("coloring document needs 'colors'")
    colors = doc["colors"]
    if not isinstance(colors, list) or any(c not in ("red", "blue") for c in colors):
        raise FormatError("'colors' must be a list of 'red'/'blue'")
    return colors


def part_to_dict(vertices) -> dict:
    return {"vertices": sorted(vertices)}


def part_from_dict(doc: dict) -> frozenset[int]:
    if not isinstance(doc, dict) or "vertices" not in doc:
        raise FormatError("decomposition document needs 'vertices'")
    return frozenset(_as_int_list(doc["vertices"], "'vertices'"))


def matching_to_dict(edges) -> dict:
    return {"edges": sorted([min(u, v), max(u, v)] for u, v in edges)}


def matching_from_dict(doc: dict) -> list[tuple[int, int]]:
    if not isinstance(doc, dict) or "edges" not in doc:
        raise FormatError("matching document needs 'edges'")
    out = []
    for e in doc["edges"]:
        if not (isinstance(e, list) and len(e) == 2 and all(isinstance(x, int) for x in e)):
            raise FormatError(f"bad matching edge: {e!r}")
        out.append((e[0], e[1]))
    return out


def load_json(path: str) -> dict:
    with open(path, "r", encoding="utf-8") as fh:
        try:
            return json.load(fh)
        except json.JSONDecodeError as exc:
            raise FormatError(f"invalid JSON in {path}: {exc}") from exc


def save_json(path: str, doc: dict) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps_json(doc))
