"""Augment a cubic planar monotone formula with a clause spanning tree.

Clause-clause edges are added greedily (each candidate re-checked with the
exact planarity test) until no further edge keeps the combined graph
planar.  Because the variable vertices form an independent set, maximal
addition makes the clause-induced subgraph connected; a spanning tree of it
is kept and the surplus clause edges are discarded.
"""

from __future__ import annotations

from itertools import combinations

from ..errors import GadgetError, PreconditionError
from ..formulas import PositiveFormula, TreeLikeInstance, incidence_graph, \
    validate_cubic_planar
from ..graph import Graph, is_planar


def make_tree_like(f: PositiveFormula) -> TreeLikeInstance:
    ok, problems = validate_cubic_planar(f)
    if not ok:
        raise PreconditionError("; ".join(problems))
    base, _ = incidence_graph(f)
    nv, m = f.num_vars, f.num_clauses
    edges = list(base.edges)
    clause_edges: list[tuple[int, int]] = []
    # One pass in lexicographic order is maximal: once an addition breaks
    # planarity it stays broken in every supergraph.
    for a, b in combinations(range(m), 2):
        candidate = (nv + a, nv + b)
        trial = Graph(base.n, edges + [candidate])
        if is_planar(trial):
            edges.append(candidate)
            clause_edges.append((a, b))

    adj: list[list[int]] = [[] for _ in range(m)]
    for a, b in clause_edges:
        adj[a].append(b)
        adj[b].append(a)
    seen = {0}
    stack = [0]
    tree: list[tuple[int, int]] = []
    while stack:
        a = stack.pop()
        for b in sorted(adj[a]):
            if b not in seen:
                seen.add(b)
                tree.append((min(a, b), max(a, b)))
                stack.append(b)
    if len(seen) != m:
        # The construction's argument guarantees connectivity; a failure
        # here means the input violates an assumption and must surface.
        raise GadgetError(
            f"maximal planar clause edges leave clauses disconnected: "
            f"reached {sorted(seen)} of {m}")
    return TreeLikeInstance(f, tree)
