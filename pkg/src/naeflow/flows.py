"""Zero-sum k-flows on edges and vertices, plus the bridges between vertex
flows and 1-in-degree decompositions on 3-regular graphs.

An edge k-flow labels every edge from {+-1, ..., +-(k-1)} so each vertex's
incident labels sum to zero (a kernel vector of the 0/1 incidence matrix).
A vertex k-flow labels vertices so each vertex's *neighbor* labels sum to
zero (kernel of the adjacency matrix).

The solvers are exact backtracking searches.  Per-constraint pruning uses
the reachable-sum form of the label set: with u undecided labels from
{+-1..+-(k-1)}, a residual r is reachable iff |r| <= u*(k-1), except that a
single label cannot be zero.  On degree-3 vertices this reproduces the
two-pattern structure (one double label of one sign, two unit labels of the
other), which is what keeps gadget-sized instances tractable.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from .decomp import Decomposition, verify_one_in_degree
from .errors import PreconditionError
from .graph import Graph, check_deadline


@dataclass(frozen=True)
class EdgeLabeling:
    """Nonzero integer per edge, aligned to the graph's canonical edge order."""

    labels: tuple[int, ...]

    def __init__(self, labels: Iterable[int]):
        labels = tuple(labels)
        if any(not isinstance(x, int) or x == 0 for x in labels):
            raise ValueError("edge labels must be nonzero integers")
        object.__setattr__(self, "labels", labels)


@dataclass(frozen=True)
class VertexLabeling:
    """Nonzero integer per vertex, aligned to vertex order."""

    labels: tuple[int, ...]

    def __init__(self, labels: Iterable[int]):
        labels = tuple(labels)
        if any(not isinstance(x, int) or x == 0 for x in labels):
            raise ValueError("vertex labels must be nonzero integers")
        object.__setattr__(self, "labels", labels)


def verify_zero_sum(g: Graph, lab: EdgeLabeling, k: int) -> bool:
    """Labels in range and every vertex's incident labels summing to zero."""
    if len(lab.labels) != len(g.edges):
        raise ValueError("labeling does not cover every edge")
    if any(abs(x) > k - 1 for x in lab.labels):
        return False
    sums = [0] * g.n
    for (u, v), x in zip(g.edges, lab.labels):
        sums[u] += x
        sums[v] += x
    return all(s == 0 for s in sums)


def verify_vertex_zero_sum(g: Graph, lab: VertexLabeling, k: int) -> bool:
    if len(lab.labels) != g.n:
        raise ValueError("labeling does not cover every vertex")
    if any(abs(x) > k - 1 for x in lab.labels):
        return False
    return all(sum(lab.labels[u] for u in g.neighbors(v)) == 0
               for v in range(g.n))


def _label_domain(k: int) -> list[int]:
    # Positive sign first, small magnitudes first: deterministic branching.
    out = []
    for mag in range(1, k):
        out += [mag, -mag]
    return out


def _reachable(residual: int, undecided: int, k: int) -> bool:
    if undecided == 0:
        return residual == 0
    if undecided == 1:
        return residual != 0 and abs(residual) <= k - 1
    return abs(residual) <= undecided * (k - 1)


def solve_zero_sum(g: Graph, k: int, stats: Optional[dict] = None,
                   deadline: Optional[float] = None) -> Optional[EdgeLabeling]:
    """First zero-sum k-flow in deterministic order, or None.

    Vertices of degree one are rejected in preprocessing (a single nonzero
    label cannot sum to zero).  Branches on the edge whose endpoints have
    the fewest undecided incident edges.
    """
    if k < 2:
        raise PreconditionError("k must be at least 2")
    m = len(g.edges)
    if any(g.degree(v) == 1 for v in range(g.n)):
        return None
    domain = _label_domain(k)
    label: list[Optional[int]] = [None] * m
    vsum = [0] * g.n
    undec = [g.degree(v) for v in range(g.n)]
    incident: list[list[int]] = [[] for _ in range(g.n)]
    for ei, (u, v) in enumerate(g.edges):
        incident[u].append(ei)
        incident[v].append(ei)
    nodes = 0
    props = 0

    def forced_at(v: int) -> Optional[tuple[int, int]]:
        # When one incident edge is left, its label is the negated residual.
        if undec[v] != 1:
            return None
        ei = next(e for e in incident[v] if label[e] is None)
        return ei, -vsum[v]

    def set_label(ei: int, value: int, trail: list[int]) -> bool:
        # Finish every endpoint update before failing so undo stays exact.
        nonlocal props
        queue = [(ei, value)]
        ok = True
        while ok and queue:
            e, val = queue.pop()
            if label[e] is not None:
                if label[e] != val:
                    ok = False
                continue
            if val == 0 or abs(val) > k - 1:
                ok = False
                continue
            label[e] = val
            trail.append(e)
            props += 1
            for v in g.edges[e]:
                vsum[v] += val
                undec[v] -= 1
                if not ok:
                    continue
                if not _reachable(-vsum[v], undec[v], k):
                    ok = False
                    continue
                forced = forced_at(v)
                if forced is not None:
                    queue.append(forced)
        return ok

    def undo(trail: list[int]) -> None:
        for e in reversed(trail):
            val = label[e]
            label[e] = None
            for v in g.edges[e]:
                vsum[v] -= val
                undec[v] += 1

    def pick_edge() -> Optional[int]:
        best, best_key = None, None
        for ei, (u, v) in enumerate(g.edges):
            if label[ei] is not None:
                continue
            key = (min(undec[u], undec[v]), ei)
            if best_key is None or key < best_key:
                best, best_key = ei, key
        return best

    def search() -> bool:
        nonlocal nodes
        nodes += 1
        if nodes % 1024 == 0:
            check_deadline(deadline)
        ei = pick_edge()
        if ei is None:
            return all(s == 0 for s in vsum)
        for val in domain:
            trail: list[int] = []
            if set_label(ei, val, trail) and search():
                return True
            undo(trail)
        return False

    found = search()
    if stats is not None:
        stats["nodes"] = stats.get("nodes", 0) + nodes
        stats["propagations"] = stats.get("propagations", 0) + props
    if not found:
        return None
    result = EdgeLabeling(label)  # type: ignore[arg-type]
    assert verify_zero_sum(g, result, k)
    return result


def solve_vertex_zero_sum(g: Graph, k: int, stats: Optional[dict] = None,
                          deadline: Optional[float] = None
                          ) -> Optional[VertexLabeling]:
    """First zero-sum vertex k-flow in deterministic order, or None."""
    if k < 2:
        raise PreconditionError("k must be at least 2")
    n = g.n
    if any(g.degree(v) == 1 for v in range(n)):
        # The single neighbor of a leaf would need label zero.
        return None
    domain = _label_domain(k)
    label: list[Optional[int]] = [None] * n
    nsum = [0] * n
    undec = [g.degree(v) for v in range(n)]
    nodes = 0
    props = 0

    def forced_at(v: int) -> Optional[tuple[int, int]]:
        if undec[v] != 1:
            return None
        u = next(x for x in g.neighbors(v) if label[x] is None)
        return u, -nsum[v]

    def set_label(u: int, value: int, trail: list[int]) -> bool:
        nonlocal props
        queue = [(u, value)]
        while queue:
            x, val = queue.pop()
            if label[x] is not None:
                if label[x] != val:
                    return False
                continue
            if val == 0 or abs(val) > k - 1:
                return False
            label[x] = val
            trail.append(x)
            props += 1
            for v in g.neighbors(x):
                nsum[v] += val
                undec[v] -= 1
                if not _reachable(-nsum[v], undec[v], k):
                    return False
                forced = forced_at(v)
                if forced is not None:
                    queue.append(forced)
        return True

    def undo(trail: list[int]) -> None:
        for x in reversed(trail):
            val = label[x]
            label[x] = None
            for v in g.neighbors(x):
                nsum[v] -= val
                undec[v] += 1

    def pick_vertex() -> Optional[int]:
        best, best_key = None, None
        for v in range(n):
            if label[v] is not None:
                continue
            tightest = min((undec[w] for w in g.neighbors(v)), default=0)
            key = (tightest, v)
            if best_key is None or key < best_key:
                best, best_key = v, key
        return best

    def search() -> bool:
        nonlocal nodes
        nodes += 1
        if nodes % 1024 == 0:
            check_deadline(deadline)
        u = pick_vertex()
        if u is None:
            return all(s == 0 for s in nsum)
        for val in domain:
            trail: list[int] = []
            if set_label(u, val, trail) and search():
                return True
            undo(trail)
        return False

    if n == 0:
        return VertexLabeling(())
    found = search()
    if stats is not None:
        stats["nodes"] = stats.get("nodes", 0) + nodes
        stats["propagations"] = stats.get("propagations", 0) + props
    if not found:
        return None
    result = VertexLabeling(label)  # type: ignore[arg-type]
    assert verify_vertex_zero_sum(g, result, k)
    return result


def _require_cubic(g: Graph) -> None:
    if g.n == 0 or any(g.degree(v) != 3 for v in range(g.n)):
        raise PreconditionError("graph is not 3-regular")


def decomposition_to_vertex_flow(g: Graph, d: Decomposition) -> VertexLabeling:
    """On a 3-regular graph, label the distinguished part 2 and the rest -1;
    each vertex then sees 2 - 1 - 1 = 0."""
    _require_cubic(g)
    if not verify_one_in_degree(g, d):
        raise PreconditionError("not a valid 1-in-degree decomposition")
    lab = VertexLabeling(tuple(2 if v in d.vertices else -1 for v in range(g.n)))
    assert verify_vertex_zero_sum(g, lab, 3)
    return lab


def vertex_flow_to_decomposition(g: Graph, lab: VertexLabeling) -> Decomposition:
    """Inverse bridge: three labels from {+-1, +-2} can only sum to zero as
    {2,-1,-1} or {-2,1,1}, so the double-label vertices are the part with
    exactly one member in every neighborhood."""
    _require_cubic(g)
    if not verify_vertex_zero_sum(g, lab, 3):
        raise PreconditionError("not a valid zero-sum vertex 3-flow")
    d = Decomposition(v for v in range(g.n) if abs(lab.labels[v]) == 2)
    assert verify_one_in_degree(g, d)
    return d
