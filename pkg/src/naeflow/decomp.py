"""Exact deciders and finders for NAE and 1-in-degree vertex decompositions.

A decomposition is stored as the distinguished part A (the side with the
"1" indicator); the other part is implicitly the complement.

  verify_one_in_degree: every vertex has exactly one neighbor in A.
  verify_nae:           every vertex has a neighbor in A and one outside A.

The 1-in-degree finder runs as exact cover (items = vertices, option u
covers N(u)); the NAE finder and the weighted variant are backtracking
searches with unit propagation.  All searches are deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from .errors import PreconditionError
from .exactcover import ExactCover
from .graph import Graph, VertexWeightedGraph, check_deadline, connected_components


@dataclass(frozen=True)
class Decomposition:
    """The distinguished vertex part A; f(v)=1 iff v is in `vertices`."""

    vertices: frozenset[int]

    def __init__(self, vertices: Iterable[int]):
        object.__setattr__(self, "vertices", frozenset(vertices))

    def __contains__(self, v: int) -> bool:
        return v in self.vertices


@dataclass(frozen=True)
class Hypergraph:
    num_vertices: int
    hyperedges: tuple[frozenset[int], ...]

    def __init__(self, num_vertices: int, hyperedges: Iterable[Iterable[int]]):
        edges = tuple(frozenset(e) for e in hyperedges)
        for e in edges:
            if not e:
                raise ValueError("empty hyperedge")
            for v in e:
                if not (0 <= v < num_vertices):
                    raise ValueError(f"hyperedge vertex {v} out of range")
        object.__setattr__(self, "num_vertices", num_vertices)
        object.__setattr__(self, "hyperedges", edges)


def _check_part(g: Graph, d: Decomposition) -> None:
    for v in d.vertices:
        if not (0 <= v < g.n):
            raise ValueError(f"decomposition references invalid vertex {v}")


def verify_one_in_degree(g: Graph, d: Decomposition) -> bool:
    _check_part(g, d)
    part = d.vertices
    return all(sum(1 for u in g.neighbors(v) if u in part) == 1 for v in range(g.n))


def verify_nae(g: Graph, d: Decomposition) -> bool:
    _check_part(g, d)
    part = d.vertices
    for v in range(g.n):
        nbrs = g.neighbors(v)
        if not any(u in part for u in nbrs):
            return False
        if not any(u not in part for u in nbrs):
            return False
    return True


def solve_one_in_degree(g: Graph, stats: Optional[dict] = None,
                        deadline: Optional[float] = None) -> Optional[Decomposition]:
    """Exact-cover search for a part A with |N(v) & A| = 1 for every vertex.

    Solved per connected component; the first solution (most-constrained
    item first, options in vertex order) is returned.
    """
    picked: list[int] = []
    for comp in connected_components(g):
        index = {v: i for i, v in enumerate(comp)}
        cover = ExactCover(len(comp))
        for v in comp:
            cover.add_option(v, [index[u] for u in g.neighbors(v)])
        solution = cover.solve_first(stats=stats, deadline=deadline)
        if solution is None:
            return None
        picked += solution
    result = Decomposition(picked)
    assert verify_one_in_degree(g, result)
    return result


def solve_nae(g: Graph, stats: Optional[dict] = None,
              deadline: Optional[float] = None) -> Optional[Decomposition]:
    """Backtracking search for a partition where every vertex sees both parts.

    Propagation: once all but one neighbor of some vertex are decided and
    they share a side, the remaining neighbor is forced to the other side.
    Branching picks the vertex whose neighborhood is closest to
    monochromatic and colors its smallest undecided neighbor, A first.
    """
    n = g.n
    if any(g.degree(v) == 0 for v in range(n)):
        return None
    in_a: list[Optional[bool]] = [None] * n
    # counts[v] = [#neighbors in A, #neighbors in B, #undecided neighbors]
    counts = [[0, 0, g.degree(v)] for v in range(n)]
    nodes = 0
    props = 0

    def set_value(v: int, value: bool, trail: list[int]) -> bool:
        # On failure the counts of every vertex recorded in `trail` must
        # still be fully applied, or the undo would desynchronize them; so
        # always finish the neighbor loop before bailing out.
        nonlocal props
        queue = [(v, value)]
        ok = True
        while ok and queue:
            u, val = queue.pop()
            if in_a[u] is not None:
                if in_a[u] != val:
                    ok = False
                continue
            in_a[u] = val
            trail.append(u)
            props += 1
            for w in g.neighbors(u):
                c = counts[w]
                c[0 if val else 1] += 1
                c[2] -= 1
                if ok and (c[0] == 0 or c[1] == 0):
                    missing = c[0] == 0
                    if c[2] == 0:
                        ok = False
                    elif c[2] == 1:
                        last = next(x for x in g.neighbors(w) if in_a[x] is None)
                        queue.append((last, missing))
        return ok

    def undo(trail: list[int]) -> None:
        for u in reversed(trail):
            val = in_a[u]
            in_a[u] = None
            for w in g.neighbors(u):
                c = counts[w]
                c[0 if val else 1] -= 1
                c[2] += 1

    def pick_branch() -> Optional[int]:
        # Most nearly monochromatic unsatisfied neighborhood, fewest undecided.
        best, best_key = None, None
        for v in range(n):
            c = counts[v]
            if c[0] > 0 and c[1] > 0:
                continue
            if c[2] == 0:
                continue
            key = (c[2], v)
            if best_key is None or key < best_key:
                best, best_key = v, key
        if best is None:
            return None
        return next(x for x in g.neighbors(best) if in_a[x] is None)

    def search() -> bool:
        nonlocal nodes
        nodes += 1
        if nodes % 1024 == 0:
            check_deadline(deadline)
        u = pick_branch()
        if u is None:
            # Every neighborhood already sees both sides (or is fully decided
            # and failed earlier); check nothing is left unsatisfied.
            return all(c[0] > 0 and c[1] > 0 for c in counts)
        for value in (True, False):
            trail: list[int] = []
            if set_value(u, value, trail) and search():
                return True
            undo(trail)
        return False

    found = search()
    if stats is not None:
        stats["nodes"] = stats.get("nodes", 0) + nodes
        stats["propagations"] = stats.get("propagations", 0) + props
    if not found:
        return None
    result = Decomposition(v for v in range(n) if in_a[v])
    assert verify_nae(g, result)
    return result


def solve_one_in_degree_weighted(wg: VertexWeightedGraph,
                                 stats: Optional[dict] = None,
                                 deadline: Optional[float] = None
                                 ) -> Optional[Decomposition]:
    """Search for f in {0,1}^V with sum of f(u)*w(u) over N(v) equal to 1.

    Interval pruning: for every vertex the fixed part of its neighbor sum
    plus the reachable range of the undecided part must contain 1.
    """
    g, w = wg.graph, wg.weights
    n = g.n
    value: list[Optional[int]] = [None] * n
    # state[v] = [fixed sum, undecided lo, undecided hi]
    state = [[0, 0, 0] for _ in range(n)]
    for v in range(n):
        for u in g.neighbors(v):
            state[v][1] += min(0, w[u])
            state[v][2] += max(0, w[u])
    nodes = 0
    props = 0

    def feasible(v: int) -> bool:
        fixed, lo, hi = state[v]
        return fixed + lo <= 1 <= fixed + hi

    def set_value(u: int, val: int, trail: list[int]) -> bool:
        # Finish every neighbor update before failing so undo stays exact.
        nonlocal props
        queue = [(u, val)]
        ok = True
        while ok and queue:
            x, xv = queue.pop()
            if value[x] is not None:
                if value[x] != xv:
                    ok = False
                continue
            value[x] = xv
            trail.append(x)
            props += 1
            for v in g.neighbors(x):
                st = state[v]
                st[0] += xv * w[x]
                st[1] -= min(0, w[x])
                st[2] -= max(0, w[x])
                if not ok:
                    continue
                if not feasible(v):
                    ok = False
                    continue
                # Unit rule: single undecided neighbor left with a forced value.
                undecided = [y for y in g.neighbors(v) if value[y] is None]
                if len(undecided) == 1:
                    y = undecided[0]
                    need = 1 - st[0]
                    can0 = need == 0
                    can1 = need == w[y]
                    if not can0 and not can1:
                        ok = False
                    elif can0 != can1:
                        queue.append((y, 1 if can1 else 0))
        return ok

    def undo(trail: list[int]) -> None:
        for x in reversed(trail):
            xv = value[x]
            value[x] = None
            for v in g.neighbors(x):
                st = state[v]
                st[0] -= xv * w[x]
                st[1] += min(0, w[x])
                st[2] += max(0, w[x])

    def search(next_v: int) -> bool:
        nonlocal nodes
        nodes += 1
        if nodes % 1024 == 0:
            check_deadline(deadline)
        u = next((x for x in range(next_v, n) if value[x] is None), None)
        if u is None:
            return all(state[v][0] == 1 for v in range(n))
        for val in (1, 0):
            trail: list[int] = []
            if set_value(u, val, trail) and search(u + 1):
                return True
            undo(trail)
        return False

    if any(not feasible(v) for v in range(n)):
        found = False
    else:
        found = search(0)
    if stats is not None:
        stats["nodes"] = stats.get("nodes", 0) + nodes
        stats["propagations"] = stats.get("propagations", 0) + props
    if not found:
        return None
    result = Decomposition(v for v in range(n) if value[v] == 1)
    assert verify_one_in_degree_weighted(wg, result)
    return result


def verify_one_in_degree_weighted(wg: VertexWeightedGraph, d: Decomposition) -> bool:
    _check_part(wg.graph, d)
    g, w = wg.graph, wg.weights
    part = d.vertices
    return all(sum(w[u] for u in g.neighbors(v) if u in part) == 1
               for v in range(g.n))


def neighborhood_hypergraph(g: Graph) -> Hypergraph:
    """One hyperedge N(v) per vertex; NAE decompositions of g are exactly the
    proper 2-colorings of this hypergraph."""
    if any(g.degree(v) == 0 for v in range(g.n)):
        raise PreconditionError("isolated vertex has an empty neighborhood")
    return Hypergraph(g.n, [g.neighbors(v) for v in range(g.n)])


def two_color_hypergraph(h: Hypergraph,
                         stats: Optional[dict] = None,
                         deadline: Optional[float] = None
                         ) -> Optional[tuple[int, ...]]:
    """Proper 2-coloring (no monochromatic hyperedge) by backtracking, or None.

    Propagation forces the last undecided vertex of an otherwise
    monochromatic hyperedge to the opposite color.
    """
    n = h.num_vertices
    edges = [tuple(sorted(e)) for e in h.hyperedges]
    member_of: list[list[int]] = [[] for _ in range(n)]
    for ei, e in enumerate(edges):
        for v in e:
            member_of[v].append(ei)
    color: list[Optional[int]] = [None] * n
    # counts[e] = [#color0, #color1, #undecided]
    counts = [[0, 0, len(e)] for e in edges]
    nodes = 0

    def set_color(v: int, c: int, trail: list[int]) -> bool:
        # Finish every count update before failing so undo stays exact.
        queue = [(v, c)]
        ok = True
        while ok and queue:
            u, cu = queue.pop()
            if color[u] is not None:
                if color[u] != cu:
                    ok = False
                continue
            color[u] = cu
            trail.append(u)
            for ei in member_of[u]:
                cnt = counts[ei]
                cnt[cu] += 1
                cnt[2] -= 1
                if not ok:
                    continue
                if cnt[2] == 0 and (cnt[0] == 0 or cnt[1] == 0):
                    ok = False
                elif cnt[2] == 1 and (cnt[0] == 0 or cnt[1] == 0):
                    forced = 0 if cnt[0] == 0 else 1
                    last = next(x for x in edges[ei] if color[x] is None)
                    queue.append((last, forced))
        return ok

    def undo(trail: list[int]) -> None:
        for u in reversed(trail):
            cu = color[u]
            color[u] = None
            for ei in member_of[u]:
                counts[ei][cu] -= 1
                counts[ei][2] += 1

    def search() -> bool:
        nonlocal nodes
        nodes += 1
        if nodes % 1024 == 0:
            check_deadline(deadline)
        u = next((v for v in range(n) if color[v] is None), None)
        if u is None:
            return all(c[0] > 0 and c[1] > 0 for c in counts)
        for c in (0, 1):
            trail: list[int] = []
            if set_color(u, c, trail) and search():
                return True
            undo(trail)
        return False

    # A singleton hyperedge can never be bichromatic.
    if any(len(e) == 1 for e in edges):
        return None
    found = search()
    if stats is not None:
        stats["nodes"] = stats.get("nodes", 0) + nodes
    if not found:
        return None
    return tuple(color)  # type: ignore[arg-type]
