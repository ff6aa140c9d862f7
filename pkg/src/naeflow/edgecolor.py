"""NAE edge colorings and 1-in-degree edge colorings (perfect matchings).

A two-coloring of the edges is NAE if every vertex is incident to both
colors.  For a connected graph with minimum degree 2 such a coloring exists
iff the graph is not an odd cycle, and the construction here is fully
deterministic:

  * cycles: alternate (impossible when odd);
  * max degree >= 4: pad odd-degree vertices pairwise with temporary
    degree-2 helpers, walk an Euler tour from a vertex of degree >= 4, and
    color the tour alternately.  Every vertex has some tour visit whose
    two consecutive edges are both original, and consecutive tour edges
    alternate except at the wrap, which sits at the high-degree start
    vertex with a spare clean visit;
  * max degree == 3: find a path between two degree-3 vertices whose
    interior has degree 2, color it alternately, delete the interior, and
    recurse on the at-most-two remaining components.  Components that are
    odd cycles contain one of the path ends and get the alternating
    coloring that starts and ends at that vertex, with the color opposite
    to the path edge there.

An edge coloring where every vertex sees color 1 exactly once is the same
thing as a perfect matching, so that decider returns a matching.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

import networkx as nx

from .errors import PreconditionError
from .graph import Graph, check_deadline, connected_components

RED, BLUE = "red", "blue"


@dataclass(frozen=True)
class TwoEdgeColoring:
    """'red'/'blue' per edge, aligned to the graph's canonical edge order."""

    colors: tuple[str, ...]

    def __init__(self, colors: Iterable[str]):
        colors = tuple(colors)
        if any(c not in (RED, BLUE) for c in colors):
            raise ValueError("edge colors must be 'red' or 'blue'")
        object.__setattr__(self, "colors", colors)


@dataclass(frozen=True)
class Matching:
    """Pairwise vertex-disjoint edge set."""

    edges: frozenset[tuple[int, int]]

    def __init__(self, edges: Iterable[tuple[int, int]]):
        canon = frozenset((min(u, v), max(u, v)) for u, v in edges)
        seen: set[int] = set()
        for u, v in canon:
            if u in seen or v in seen or u == v:
                raise ValueError("edges share a vertex")
            seen.update((u, v))
        object.__setattr__(self, "edges", canon)


def verify_nae_edge(g: Graph, c: TwoEdgeColoring) -> bool:
    """Every vertex incident with both colors."""
    if len(c.colors) != len(g.edges):
        raise ValueError("coloring does not cover every edge")
    saw_red = [False] * g.n
    saw_blue = [False] * g.n
    for (u, v), col in zip(g.edges, c.colors):
        if col == RED:
            saw_red[u] = saw_red[v] = True
        else:
            saw_blue[u] = saw_blue[v] = True
    return all(saw_red[v] and saw_blue[v] for v in range(g.n))


def _cycle_order(adj: dict[int, list[int]], start: int) -> list[int]:
    """Vertices of a cycle graph in traversal order from `start`
    (smallest-id neighbor first)."""
    order = [start]
    prev, cur = None, start
    while True:
        nxt = next(w for w in sorted(adj[cur]) if w != prev)
        if nxt == start:
            return order
        order.append(nxt)
        prev, cur = cur, nxt


def _alternate_cycle(order: list[int], first: str) -> dict[tuple[int, int], str]:
    colors = {}
    cur = first
    for i in range(len(order)):
        u, v = order[i], order[(i + 1) % len(order)]
        colors[(min(u, v), max(u, v))] = cur
        cur = BLUE if cur == RED else RED
    return colors


def _euler_case(adj: dict[int, list[int]]) -> dict[tuple[int, int], str]:
    """Max degree >= 4: Euler-tour coloring with temporary odd-degree helpers."""
    originals = set(adj)
    odd = sorted(v for v in adj if len(adj[v]) % 2 == 1)
    work: dict[int, list[int]] = {v: list(ws) for v, ws in adj.items()}
    helper = max(adj) + 1
    for i in range(0, len(odd), 2):
        x, y = odd[i], odd[i + 1]
        work[helper] = [x, y]
        work[x].append(helper)
        work[y].append(helper)
        helper += 1
    start = min(v for v in adj if len(adj[v]) >= 4)

    # Hierholzer from `start`, smallest neighbor first.
    used: set[tuple[int, int]] = set()
    ptr = {v: 0 for v in work}
    nbrs = {v: sorted(ws) for v, ws in work.items()}
    stack = [start]
    circuit = []
    while stack:
        v = stack[-1]
        advanced = False
        while ptr[v] < len(nbrs[v]):
            w = nbrs[v][ptr[v]]
            e = (min(v, w), max(v, w))
            if e in used:
                ptr[v] += 1
                continue
            used.add(e)
            stack.append(w)
            advanced = True
            break
        if not advanced:
            circuit.append(stack.pop())
    circuit.reverse()

    colors: dict[tuple[int, int], str] = {}
    cur = RED
    for a, b in zip(circuit, circuit[1:]):
        e = (min(a, b), max(a, b))
        if a in originals and b in originals:
            colors[e] = cur
        cur = BLUE if cur == RED else RED
    return colors


def _find_junction_path(adj: dict[int, list[int]]) -> tuple[int, list[int], int]:
    """Path v, interior..., u between two distinct degree-3 vertices with all
    interior vertices of degree 2.

    Walks from the smallest degree-3 vertex; a direction whose walk loops
    back to the start (a pendant cycle) is skipped — at most one such loop
    can exist, so some direction always reaches a different junction.
    """
    v = min(x for x in adj if len(adj[x]) == 3)
    for first in sorted(adj[v]):
        interior = []
        prev, cur = v, first
        while len(adj[cur]) == 2:
            interior.append(cur)
            nxt = next(w for w in adj[cur] if w != prev)
            prev, cur = cur, nxt
        if cur != v:
            return v, interior, cur
    raise AssertionError("every walk from a junction returned to it")


def _color_components(adj: dict[int, list[int]],
                      forbidden_color: dict[int, str]) -> dict[tuple[int, int], str]:
    """Color each component of `adj`.  A component that is an odd cycle must
    contain a vertex from `forbidden_color`; it gets the alternating coloring
    whose doubled color at that vertex avoids the recorded forbidden value."""
    out: dict[tuple[int, int], str] = {}
    seen: set[int] = set()
    for root in sorted(adj):
        if root in seen or not adj[root]:
            continue
        comp = _component_of(adj, root)
        seen.update(comp)
        sub = {v: [w for w in adj[v] if w in comp] for v in comp}
        degs = sorted(len(ws) for ws in sub.values())
        if degs[0] == degs[-1] == 2 and len(comp) % 2 == 1:
            base = next((v for v in sorted(comp) if v in forbidden_color), None)
            assert base is not None, "odd cycle component without a path end"
            color = BLUE if forbidden_color[base] == RED else RED
            out.update(_alternate_cycle(_cycle_order(sub, base), color))
        else:
            out.update(_color_connected(sub))
    return out


def _component_of(adj: dict[int, list[int]], root: int) -> set[int]:
    comp = {root}
    stack = [root]
    while stack:
        x = stack.pop()
        for w in adj[x]:
            if w not in comp:
                comp.add(w)
                stack.append(w)
    return comp


def _color_connected(adj: dict[int, list[int]]) -> dict[tuple[int, int], str]:
    """NAE-color a connected graph with min degree 2 that is not an odd cycle."""
    degs = [len(ws) for ws in adj.values()]
    assert min(degs) >= 2, "recursion produced a vertex of degree below 2"
    if max(degs) == 2:
        order = _cycle_order(adj, min(adj))
        assert len(order) % 2 == 0, "odd cycle reached the colorable branch"
        return _alternate_cycle(order, RED)
    if max(degs) >= 4:
        return _euler_case(adj)

    v, interior, u = _find_junction_path(adj)
    colors: dict[tuple[int, int], str] = {}
    path = [v] + interior + [u]
    cur = RED
    for a, b in zip(path, path[1:]):
        colors[(min(a, b), max(a, b))] = cur
        cur = BLUE if cur == RED else RED
    last_color = colors[(min(path[-2], u), max(path[-2], u))]

    rest = {x: [w for w in ws if w not in interior]
            for x, ws in adj.items() if x not in interior}
    if not interior:
        # v and u adjacent: drop just that edge.
        rest[v] = [w for w in rest[v] if w != u]
        rest[u] = [w for w in rest[u] if w != v]
    # An odd-cycle component must pick the color opposite the path edge at
    # whichever path end it contains.
    colors.update(_color_components(rest, {v: RED, u: last_color}))
    return colors


def nae_edge_coloring(g: Graph) -> Optional[TwoEdgeColoring]:
    """Constructive NAE edge coloring of a connected graph with min degree 2;
    None exactly when the graph is an odd cycle."""
    if g.n == 0:
        raise PreconditionError("empty graph")
    if any(g.degree(v) < 2 for v in range(g.n)):
        raise PreconditionError("minimum degree below 2")
    if len(connected_components(g)) != 1:
        raise PreconditionError("graph is disconnected")
    if max(g.degrees()) == 2 and g.n % 2 == 1:
        return None
    adj = {v: list(g.neighbors(v)) for v in range(g.n)}
    colors = _color_connected(adj)
    result = TwoEdgeColoring(tuple(colors[e] for e in g.edges))
    assert verify_nae_edge(g, result)
    return result


def brute_force_nae_edge(g: Graph, max_edges: int = 24,
                         deadline: Optional[float] = None
                         ) -> Optional[TwoEdgeColoring]:
    """Exhaustive backtracking oracle over all 2^m edge colorings.

    Prunes a branch only when some vertex's incident edges are fully
    colored in one color, so the search space is explored completely.
    """
    m = len(g.edges)
    if m > max_edges:
        raise PreconditionError(f"{m} edges exceed the brute-force bound {max_edges}")
    remaining = [g.degree(v) for v in range(g.n)]
    saw = [[0, 0] for _ in range(g.n)]
    colors: list[Optional[str]] = [None] * m
    steps = 0

    def assign(ei: int, ci: int) -> bool:
        ok = True
        for v in g.edges[ei]:
            saw[v][ci] += 1
            remaining[v] -= 1
            if remaining[v] == 0 and (saw[v][0] == 0 or saw[v][1] == 0):
                ok = False
        return ok

    def unassign(ei: int, ci: int) -> None:
        for v in g.edges[ei]:
            saw[v][ci] -= 1
            remaining[v] += 1

    def search(ei: int) -> bool:
        nonlocal steps
        steps += 1
        if steps % 4096 == 0:
            check_deadline(deadline)
        if ei == m:
            return True
        for ci, col in enumerate((RED, BLUE)):
            colors[ei] = col
            if assign(ei, ci) and search(ei + 1):
                return True
            unassign(ei, ci)
        colors[ei] = None
        return False

    if any(g.degree(v) < 2 for v in range(g.n)):
        return None
    if search(0):
        return TwoEdgeColoring(tuple(colors))  # type: ignore[arg-type]
    return None


def one_in_degree_edge(g: Graph) -> Optional[Matching]:
    """Edges colored 1 exactly once around every vertex = a perfect matching.

    Exact maximum-cardinality matching (blossom algorithm); returns the
    matching when it covers every vertex, else None.
    """
    if g.n % 2 == 1:
        return None
    matching = nx.max_weight_matching(g.to_networkx(), maxcardinality=True)
    if 2 * len(matching) != g.n:
        return None
    return Matching(matching)
