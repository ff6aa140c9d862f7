"""Simple undirected graphs and the structural predicates shared by all solvers.

Vertices are dense integers 0..n-1; optional names are cosmetic metadata.
Graphs are immutable after construction, so every operation here is a pure
function that is safe to call concurrently on shared inputs.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Optional

import networkx as nx

from .errors import PreconditionError, SolveTimeout


class Graph:
    """Immutable simple undirected graph.

    Multi-edges and self-loops are rejected at construction: everything
    downstream (degree counting, flows, gadget generators) assumes simple
    graphs.
    """

    __slots__ = ("n", "edges", "names", "_adj", "_edge_index")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]],
                 names: Optional[Iterable[str]] = None):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        canon = []
        for u, v in edges:
            if not (isinstance(u, int) and isinstance(v, int)):
                raise ValueError(f"edge endpoints must be integers: {(u, v)!r}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge {(u, v)} out of range for n={n}")
            canon.append((u, v) if u < v else (v, u))
        canon.sort()
        for a, b in zip(canon, canon[1:]):
            if a == b:
                raise ValueError(f"duplicate edge {a}")
        self.n = n
        self.edges: tuple[tuple[int, int], ...] = tuple(canon)
        if names is not None:
            names = tuple(str(s) for s in names)
            if len(names) != n:
                raise ValueError("names must cover every vertex")
        self.names = names
        adj: list[list[int]] = [[] for _ in range(n)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        self._adj = tuple(tuple(sorted(a)) for a in adj)
        self._edge_index = {e: i for i, e in enumerate(self.edges)}

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def degrees(self) -> tuple[int, ...]:
        return tuple(len(a) for a in self._adj)

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return ((u, v) if u < v else (v, u)) in self._edge_index

    def edge_index(self, u: int, v: int) -> int:
        """Position of edge {u,v} in the canonical (sorted) edge order."""
        return self._edge_index[(u, v) if u < v else (v, u)]

    def to_networkx(self) -> "nx.Graph":
        g = nx.Graph()
        g.add_nodes_from(range(self.n))
        g.add_edges_from(self.edges)
        return g

    def __eq__(self, other) -> bool:
        return (isinstance(other, Graph) and self.n == other.n
                and self.edges == other.edges and self.names == other.names)

    def __hash__(self) -> int:
        return hash((self.n, self.edges, self.names))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={len(self.edges)})"


class VertexWeightedGraph:
    """A graph together with an integer weight per vertex."""

    __slots__ = ("graph", "weights")

    def __init__(self, graph: Graph, weights: Iterable[int]):
        weights = tuple(weights)
        if len(weights) != graph.n:
            raise ValueError("weight must be defined for every vertex")
        if not all(isinstance(w, int) for w in weights):
            raise ValueError("weights must be integers")
        self.graph = graph
        self.weights = weights

    def __eq__(self, other) -> bool:
        return (isinstance(other, VertexWeightedGraph)
                and self.graph == other.graph and self.weights == other.weights)

    def __hash__(self) -> int:
        return hash((self.graph, self.weights))

    def __repr__(self) -> str:
        return f"VertexWeightedGraph(n={self.graph.n}, m={len(self.graph.edges)})"


@dataclass(frozen=True)
class Bipartition:
    """Two disjoint sides covering all vertices; every edge crosses sides."""

    left: frozenset[int]
    right: frozenset[int]


class DegreeProfile(NamedTuple):
    delta: int
    Delta: int
    regular: Optional[int]      # r if the graph is r-regular
    semiregular: Optional[int]  # d if all degrees lie in {d, d+1}


@dataclass(frozen=True)
class CycleClassReport:
    """Outcome of searching for a simple cycle of length = 2 (mod 4)."""

    has_bad_cycle: bool
    witness: Optional[tuple[int, ...]]
    cycles_enumerated: int
    exhausted: bool


def is_bipartite(g: Graph) -> Optional[Bipartition]:
    """BFS 2-coloring; component roots (smallest ids) land on the left side."""
    side: list[Optional[bool]] = [None] * g.n
    for root in range(g.n):
        if side[root] is not None:
            continue
        side[root] = True
        queue = [root]
        while queue:
            v = queue.pop(0)
            for w in g.neighbors(v):
                if side[w] is None:
                    side[w] = not side[v]
                    queue.append(w)
                elif side[w] == side[v]:
                    return None
    left = frozenset(v for v in range(g.n) if side[v])
    right = frozenset(v for v in range(g.n) if not side[v])
    return Bipartition(left, right)


def odd_cycle(g: Graph) -> Optional[list[int]]:
    """Return the vertex sequence of some odd cycle, or None if bipartite.

    Used as the negative witness for bipartiteness checks.
    """
    side: list[Optional[bool]] = [None] * g.n
    parent: list[int] = [-1] * g.n
    for root in range(g.n):
        if side[root] is not None:
            continue
        side[root] = True
        queue = [root]
        while queue:
            v = queue.pop(0)
            for w in g.neighbors(v):
                if side[w] is None:
                    side[w] = not side[v]
                    parent[w] = v
                    queue.append(w)
                elif side[w] == side[v]:
                    # Climb to the common ancestor of v and w.
                    pv, pw = [v], [w]
                    seen = {v: 0}
                    x = v
                    while parent[x] != -1:
                        x = parent[x]
                        pv.append(x)
                        seen[x] = len(pv) - 1
                    x = w
                    while x not in seen:
                        x = parent[x]
                        pw.append(x)
                    cycle = pv[:seen[x] + 1] + pw[:-1][::-1]
                    return cycle
    return None


def degree_profile(g: Graph) -> DegreeProfile:
    if g.n == 0:
        raise PreconditionError("degree profile of the empty graph is undefined")
    degs = g.degrees()
    lo, hi = min(degs), max(degs)
    regular = lo if lo == hi else None
    semiregular = lo if hi - lo <= 1 else None
    return DegreeProfile(lo, hi, regular, semiregular)


def connected_components(g: Graph) -> list[tuple[int, ...]]:
    """Components as sorted vertex tuples, ordered by smallest contained id."""
    seen = [False] * g.n
    comps = []
    for root in range(g.n):
        if seen[root]:
            continue
        seen[root] = True
        comp = [root]
        stack = [root]
        while stack:
            v = stack.pop()
            for w in g.neighbors(v):
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    stack.append(w)
        comps.append(tuple(sorted(comp)))
    return comps


def euler_tour(g: Graph, start: int) -> list[tuple[int, int]]:
    """Closed trail using every edge exactly once, starting and ending at `start`.

    Hierholzer's algorithm with smallest-neighbor-first traversal, so the
    output is deterministic.
    """
    if not (0 <= start < g.n):
        raise PreconditionError(f"start vertex {start} out of range")
    if g.degree(start) == 0:
        raise PreconditionError("start vertex is isolated")
    odd = [v for v in range(g.n) if g.degree(v) % 2 == 1]
    if odd:
        raise PreconditionError(f"vertices of odd degree: {odd[:4]}")
    active = [v for v in range(g.n) if g.degree(v) > 0]
    reach = {start}
    stack = [start]
    while stack:
        v = stack.pop()
        for w in g.neighbors(v):
            if w not in reach:
                reach.add(w)
                stack.append(w)
    if any(v not in reach for v in active):
        raise PreconditionError("graph is disconnected on its non-isolated vertices")

    used = set()
    ptr = [0] * g.n  # per-vertex scan position into the sorted adjacency
    walk_stack = [start]
    circuit = []
    while walk_stack:
        v = walk_stack[-1]
        nbrs = g.neighbors(v)
        advanced = False
        while ptr[v] < len(nbrs):
            w = nbrs[ptr[v]]
            e = (v, w) if v < w else (w, v)
            if e in used:
                ptr[v] += 1
                continue
            used.add(e)
            walk_stack.append(w)
            advanced = True
            break
        if not advanced:
            circuit.append(walk_stack.pop())
    circuit.reverse()
    return [(circuit[i], circuit[i + 1]) for i in range(len(circuit) - 1)]


def iter_simple_cycles(g: Graph):
    """Yield every simple cycle exactly once, as a vertex tuple.

    Rooted DFS: each cycle is reported from its smallest vertex, walking
    toward its smaller second vertex first, so the enumeration order is
    deterministic.  Worst-case exponential; callers cap the count.
    """
    for root in range(g.n):
        path = [root]
        on_path = {root}
        # Stack of iterators parallels `path`.
        iters = [iter(g.neighbors(root))]
        while iters:
            found = None
            for w in iters[-1]:
                v = path[-1]
                if w == root and len(path) >= 3 and path[1] < path[-1]:
                    yield tuple(path)
                    continue
                if w > root and w not in on_path:
                    found = w
                    break
            if found is None:
                on_path.discard(path.pop())
                iters.pop()
            else:
                path.append(found)
                on_path.add(found)
                iters.append(iter(g.neighbors(found)))


def has_cycle_2_mod_4(g: Graph, cycle_cap: int = 10 ** 6) -> CycleClassReport:
    """Search the simple cycles of g for one of length = 2 (mod 4).

    Stops on the first witness; otherwise enumerates up to `cycle_cap`
    cycles.  `exhausted` is True only when every simple cycle was checked,
    which is what certifies a negative answer.
    """
    count = 0
    for cycle in iter_simple_cycles(g):
        count += 1
        if len(cycle) % 4 == 2:
            return CycleClassReport(True, cycle, count, False)
        if count >= cycle_cap:
            return CycleClassReport(False, None, count, False)
    return CycleClassReport(False, None, count, True)


def is_planar(g: Graph) -> bool:
    """Exact planarity decision (left-right criterion)."""
    ok, _ = nx.check_planarity(g.to_networkx(), counterexample=False)
    return ok


def planar_embedding(g: Graph) -> Optional[dict[int, list[int]]]:
    """Rotation system of a planar embedding: clockwise neighbor order per vertex."""
    ok, emb = nx.check_planarity(g.to_networkx(), counterexample=False)
    if not ok:
        return None
    return {v: list(nbrs) for v, nbrs in emb.get_data().items()}


def kuratowski_evidence(g: Graph) -> Optional[list[tuple[int, int]]]:
    """Edges of a K5/K3,3 subdivision when g is non-planar, else None."""
    ok, counter = nx.check_planarity(g.to_networkx(), counterexample=True)
    if ok:
        return None
    return sorted((min(u, v), max(u, v)) for u, v in counter.edges())


def check_deadline(deadline: Optional[float]) -> None:
    if deadline is not None and time.monotonic() > deadline:
        raise SolveTimeout("solver exceeded its time limit")
