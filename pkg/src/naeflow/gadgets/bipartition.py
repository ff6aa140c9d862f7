"""Reduction from NAE satisfiability to minimum edge deletion for
bipartiteness, plus the exact deletion solver.

The gadget puts one anchor vertex per variable and, per clause, a triangle
over the clause's occurrence vertices, each joined to its variable's
anchor.  The k clause triangles are edge-disjoint, so at least k deletions
are always needed; exactly k suffice iff the formula has an assignment with
both truth values in every clause (delete the triangle edge joining the two
equal-valued members, then anchors and occurrences 2-color).

The deletion solver is exact branch and bound over vertex bipartitions:
the deleted set is the monochromatic edges of the best 2-coloring.
"""

from __future__ import annotations

from typing import Optional

from ..errors import PreconditionError
from ..formulas import PositiveFormula
from ..graph import Graph, check_deadline
from .base import GadgetInstance, Provenance


def gen_bipartition_instance(f: PositiveFormula) -> GadgetInstance:
    for ci, clause in enumerate(f.clauses):
        if len(clause) != 3:
            raise PreconditionError(f"clause {ci} has size {len(clause)}, expected 3")
    roles: list[Provenance] = []
    edges: list[tuple[int, int]] = []

    anchors = []
    for x in range(f.num_vars):
        v = len(roles)
        roles.append(Provenance(v, "variable_anchor", f"x{x}"))
        anchors.append(v)
    occurrence = []
    for ci, clause in enumerate(f.clauses):
        triple = []
        for x in clause:
            v = len(roles)
            roles.append(Provenance(v, "occurrence", f"c{ci},x{x}"))
            edges.append((anchors[x], v))
            triple.append(v)
        edges += [(triple[0], triple[1]), (triple[1], triple[2]),
                  (triple[0], triple[2])]
        occurrence.append(triple)

    graph = Graph(len(roles), edges)
    params = {
        "kind": "bipartition-gadget",
        "num_vars": f.num_vars,
        "clauses": [list(c) for c in f.clauses],
        "anchors": anchors,
        "occurrence": occurrence,
    }
    return GadgetInstance(graph, tuple(roles), params)


def min_edge_deletion_bipartition(g: Graph, stats: Optional[dict] = None,
                                  deadline: Optional[float] = None
                                  ) -> tuple[int, list[tuple[int, int]]]:
    """Exact minimum number of edges whose removal leaves a bipartite graph,
    with one optimal edge set.

    Branch and bound on 2-colorings in a BFS vertex order (so each new
    vertex usually has colored neighbors); the bound is the count of
    monochromatic edges so far.  The first vertex of each component is
    pinned to one side to halve the space.
    """
    n = g.n
    order: list[int] = []
    pinned = set()
    seen = [False] * n
    for root in range(n):
        if seen[root]:
            continue
        seen[root] = True
        pinned.add(root)
        queue = [root]
        while queue:
            v = queue.pop(0)
            order.append(v)
            for w in g.neighbors(v):
                if not seen[w]:
                    seen[w] = True
                    queue.append(w)

    color: list[Optional[int]] = [None] * n
    best_cost = len(g.edges) + 1
    best_coloring: list[int] = []
    nodes = 0

    def search(idx: int, cost: int) -> None:
        nonlocal best_cost, best_coloring, nodes
        nodes += 1
        if nodes % 4096 == 0:
            check_deadline(deadline)
        if cost >= best_cost:
            return
        if idx == len(order):
            best_cost = cost
            best_coloring = [c for c in color]  # type: ignore[misc]
            return
        v = order[idx]
        sides = (0,) if v in pinned else (0, 1)
        for side in sides:
            color[v] = side
            extra = sum(1 for w in g.neighbors(v)
                        if color[w] is not None and color[w] == side)
            search(idx + 1, cost + extra)
        color[v] = None

    search(0, 0)
    if stats is not None:
        stats["nodes"] = stats.get("nodes", 0) + nodes
    final = {v: c for v, c in zip(range(n), best_coloring)}
    deleted = [(u, v) for u, v in g.edges if final[u] == final[v]]
    assert len(deleted) == best_cost
    return best_cost, deleted
