"""Reduction from tree-like monotone instances to zero-sum 3-flow existence.

Every variable becomes a 6-ring with three 5-vertex port blocks hanging off
its junctions; every clause becomes a ring of length 2*(tree degree)+8 with
port blocks, plus a hub vertex tied to the last ring port (the anchor).
Ports of different gadgets are joined following one incidence/tree edge
each, in the cyclic order of a planar embedding of the tree-like graph, so
the result stays planar.  The three clause ports joined to variables are
then wired to the hub, and each has one ring edge replaced by a degree-4
splitter carrying two extra port blocks.

The port block {u,a,b,c,d} (edges ua, ub, ac, ad, bc, bd, cd + one external
edge at u) has five vertices, all of degree 3 once attached.  In any valid
3-flow the double-label edges form a matching saturating it, and an odd
block can only be saturated through the external edge, which is what welds
gadget signs together.

Witness transfer: a satisfying one-true-per-clause assignment gives every
variable gadget sign +1/-1 (label pattern "one +-2 per vertex, rest single
units"), the whole clause side sign -1, splitters absorbing the slack; the
hub then balances because exactly one incident variable is true.  The
reverse map normalizes the global sign so the anchor-hub edges read -2 and
reads each variable's sign off its first block edge.
"""

from __future__ import annotations

from ..errors import GadgetError, PreconditionError
from ..flows import EdgeLabeling, verify_zero_sum
from ..formulas import (Assignment, PositiveFormula, TreeLikeInstance,
                        combined_graph, evaluate)
from ..graph import Graph, degree_profile, is_planar, planar_embedding
from .base import GadgetInstance, Provenance

BLOCK_ROLES = ("block_port", "block_inner_a", "block_inner_b",
               "block_inner_c", "block_inner_d")


class _Builder:
    def __init__(self):
        self.roles: list[Provenance] = []
        self.edges: list[tuple[int, int]] = []

    def vertex(self, role: str, source: str) -> int:
        v = len(self.roles)
        self.roles.append(Provenance(v, role, source))
        return v

    def edge(self, u: int, v: int) -> None:
        self.edges.append((min(u, v), max(u, v)))

    def block(self, source: str) -> list[int]:
        """Port block: 5 vertices, 7 internal edges, external edge added by
        the caller at the port (first id)."""
        u, a, b, c, d = (self.vertex(r, source) for r in BLOCK_ROLES)
        for e in ((u, a), (u, b), (a, c), (a, d), (b, c), (b, d), (c, d)):
            self.edge(*e)
        return [u, a, b, c, d]


def gen_zero_sum_instance(t: TreeLikeInstance) -> GadgetInstance:
    f = t.formula
    problems = []
    for ci, clause in enumerate(f.clauses):
        if len(clause) != 3:
            problems.append(f"clause {ci} has size {len(clause)}")
    for x, cnt in enumerate(f.occurrence_counts()):
        if cnt != 3:
            problems.append(f"variable {x} occurs {cnt} times")
    if problems:
        raise PreconditionError("; ".join(problems))

    host = combined_graph(t)
    rotation = planar_embedding(host)
    if rotation is None:
        raise PreconditionError("tree-like graph is not planar")
    nv, m = f.num_vars, f.num_clauses
    gamma = t.gamma()

    b = _Builder()
    variable_rings: list[list[int]] = []
    variable_blocks: list[list[list[int]]] = []
    for x in range(nv):
        src = f"x{x}"
        ring = []
        for i in range(3):
            ring.append(b.vertex("ring_junction", src))
            ring.append(b.vertex("ring_port", src))
        for i in range(6):
            b.edge(ring[i], ring[(i + 1) % 6])
        blocks = []
        for i in range(3):
            blk = b.block(src)
            b.edge(blk[0], ring[2 * i])
            blocks.append(blk)
        variable_rings.append(ring)
        variable_blocks.append(blocks)

    clause_rings: list[list[int]] = []
    clause_blocks: list[list[list[int]]] = []
    hubs: list[int] = []
    anchors: list[int] = []
    for ci in range(m):
        src = f"c{ci}"
        size = gamma[ci] + 4
        ring = []
        for i in range(size):
            ring.append(b.vertex("ring_junction", src))
            ring.append(b.vertex("ring_port", src))
        for i in range(2 * size):
            b.edge(ring[i], ring[(i + 1) % (2 * size)])
        blocks = []
        for i in range(size):
            blk = b.block(src)
            b.edge(blk[0], ring[2 * i])
            blocks.append(blk)
        hub = b.vertex("clause_hub", src)
        anchor = ring[2 * size - 1]
        b.edge(hub, anchor)
        clause_rings.append(ring)
        clause_blocks.append(blocks)
        hubs.append(hub)
        anchors.append(anchor)

    # Ports in ring order; the clause anchor (last port) is excluded.
    def ports_of(hv: int) -> list[int]:
        if hv < nv:
            ring = variable_rings[hv]
            return [ring[1], ring[3], ring[5]]
        ring = clause_rings[hv - nv]
        return [ring[2 * i + 1] for i in range(len(ring) // 2 - 1)]

    portmap: dict[tuple[int, int], int] = {}
    for hv in range(host.n):
        ports = ports_of(hv)
        rot = rotation[hv]
        if len(rot) != len(ports):
            raise GadgetError(
                f"host vertex {hv}: {len(rot)} edges for {len(ports)} ports")
        for idx, hw in enumerate(rot):
            portmap[(hv, hw)] = ports[idx]

    pairings: list[list[int]] = []
    for hu, hv in host.edges:
        b.edge(portmap[(hu, hv)], portmap[(hv, hu)])
        pairings.append(sorted((portmap[(hu, hv)], portmap[(hv, hu)])))

    # Clause ports joined to variable ports become hub neighbors, and one of
    # their two ring edges is replaced by a splitter with two fresh blocks.
    variable_port_owner = {}
    for x in range(nv):
        for w in ports_of(x):
            variable_port_owner[w] = x
    importants: list[list[list[int]]] = []
    splitters: list[list[int]] = []
    splitter_blocks: list[list[list[int]]] = []
    for ci in range(m):
        ring = clause_rings[ci]
        entries = []
        for pa, pb in pairings:
            for w, other in ((pa, pb), (pb, pa)):
                if w in ring and other in variable_port_owner:
                    entries.append((ring.index(w), w, variable_port_owner[other],
                                    other))
        entries.sort()
        if len(entries) != 3:
            raise GadgetError(
                f"clause {ci}: {len(entries)} variable pairings, expected 3")
        importants.append([[w, x, vport] for _, w, x, vport in entries])
        for pos, w, x, vport in entries:
            b.edge(hubs[ci], w)
            z = ring[pos - 1]  # same-index junction preceding the port
            src = f"c{ci}:port{pos // 2}"
            s = b.vertex("splitter", src)
            blk1 = b.block(src)
            blk2 = b.block(src)
            b.edge(s, blk1[0])
            b.edge(s, blk2[0])
            b.edge(s, w)
            b.edge(s, z)
            splitters.append([s, w, z])
            splitter_blocks.append([blk1, blk2])

    removed = {(min(w, z), max(w, z)) for _, w, z in splitters}
    final_edges = [e for e in b.edges if e not in removed]
    graph = Graph(len(b.roles), final_edges)

    profile = degree_profile(graph)
    if (profile.delta, profile.Delta) != (3, 4):
        raise GadgetError(f"gadget is not (3,4)-semiregular: {profile}")
    if not is_planar(graph):
        raise GadgetError("gadget lost planarity; port pairing is inconsistent")
    deg4 = {v for v in range(graph.n) if graph.degree(v) == 4}
    expected4 = set(hubs) | {s for s, _, _ in splitters} | \
        {w for per_clause in importants for w, _, _ in per_clause}
    if deg4 != expected4:
        raise GadgetError("unexpected degree-4 vertices in gadget")

    params = {
        "kind": "zero-sum-flow-gadget",
        "num_vars": nv,
        "clauses": [list(c) for c in f.clauses],
        "clause_tree_edges": [list(e) for e in t.clause_tree_edges],
        "gamma": list(gamma),
        "variable_rings": variable_rings,
        "variable_blocks": variable_blocks,
        "clause_rings": clause_rings,
        "clause_blocks": clause_blocks,
        "hubs": hubs,
        "anchors": anchors,
        "pairings": pairings,
        "importants": importants,
        "splitters": splitters,
        "splitter_blocks": splitter_blocks,
    }
    return GadgetInstance(graph, tuple(b.roles), params)


def _label_block(labels: dict, g: Graph, block: list[int], sign: int) -> None:
    """Internal block labels for a block whose external edge carries 2*sign."""
    u, a, b, c, d = block
    for x, y, val in ((u, a, -sign), (u, b, -sign), (a, c, 2 * sign),
                      (a, d, -sign), (b, c, -sign), (b, d, 2 * sign),
                      (c, d, -sign)):
        labels[(min(x, y), max(x, y))] = val


def _set(labels: dict, x: int, y: int, val: int) -> None:
    labels[(min(x, y), max(x, y))] = val


def source_formula(gi: GadgetInstance) -> PositiveFormula:
    return PositiveFormula(gi.params["num_vars"], gi.params["clauses"])


def witness_flow_from_assignment(gi: GadgetInstance, a: Assignment) -> EdgeLabeling:
    """Complete zero-sum 3-flow realizing a one-true-per-clause assignment.

    Variable gadgets take sign +1 (true) or -1 (false); the whole clause
    side takes sign -1, so anchor-hub edges read -2.
    """
    f = source_formula(gi)
    if not evaluate(f, a, "one_in_k"):
        raise PreconditionError("assignment does not satisfy one-in-three")
    p = gi.params
    g = gi.base_graph()
    labels: dict[tuple[int, int], int] = {}

    for x in range(p["num_vars"]):
        s = 1 if a[x] else -1
        ring = p["variable_rings"][x]
        for i in range(6):
            _set(labels, ring[i], ring[(i + 1) % 6], -s)
        for i, blk in enumerate(p["variable_blocks"][x]):
            _label_block(labels, g, blk, s)
            _set(labels, blk[0], ring[2 * i], 2 * s)

    port_sign = {}
    for x in range(p["num_vars"]):
        ring = p["variable_rings"][x]
        for w in (ring[1], ring[3], ring[5]):
            port_sign[w] = 1 if a[x] else -1

    for ci in range(len(p["clauses"])):
        ring = p["clause_rings"][ci]
        size = len(ring)
        for i in range(size):
            _set(labels, ring[i], ring[(i + 1) % size], 1)
        for i, blk in enumerate(p["clause_blocks"][ci]):
            _label_block(labels, g, blk, -1)
            _set(labels, blk[0], ring[2 * i], -2)
        _set(labels, p["hubs"][ci], p["anchors"][ci], -2)
        for w, x, vport in p["importants"][ci]:
            _set(labels, p["hubs"][ci], w, -2 * port_sign[vport])

    for pa, pb in p["pairings"]:
        if pa in port_sign or pb in port_sign:
            s = port_sign.get(pa, port_sign.get(pb))
            _set(labels, pa, pb, 2 * s)
        else:
            _set(labels, pa, pb, -2)  # tree edge between two clause gadgets

    for (s, w, z), (blk1, blk2) in zip(p["splitters"], p["splitter_blocks"]):
        _set(labels, s, w, -1)
        _set(labels, s, z, 1)
        _label_block(labels, g, blk1, 1)
        _set(labels, s, blk1[0], 2)
        _label_block(labels, g, blk2, -1)
        _set(labels, s, blk2[0], -2)

    # The splitter replaced one ring edge per important port; drop its label.
    removed = {(min(w, z), max(w, z)) for _, w, z in p["splitters"]}
    for e in removed:
        labels.pop(e, None)

    result = EdgeLabeling(tuple(labels[e] for e in g.edges))
    assert verify_zero_sum(g, result, 3), "forward witness failed verification"
    return result


def assignment_from_flow(gi: GadgetInstance, lab: EdgeLabeling) -> Assignment:
    """Extract a one-true-per-clause assignment from any valid 3-flow.

    Flows are closed under negation, so normalize the global sign first:
    after normalization every anchor-hub edge carries -2, and a variable is
    true exactly when its gadget's block edges carry +2.
    """
    g = gi.base_graph()
    if not verify_zero_sum(g, lab, 3):
        raise PreconditionError("labeling is not a zero-sum 3-flow")
    p = gi.params
    values = list(lab.labels)

    first_anchor = g.edge_index(p["hubs"][0], p["anchors"][0])
    if abs(values[first_anchor]) != 2:
        raise GadgetError("anchor edge does not carry a double label")
    if values[first_anchor] > 0:
        values = [-x for x in values]
    for ci in range(len(p["clauses"])):
        e = g.edge_index(p["hubs"][ci], p["anchors"][ci])
        if values[e] != -2:
            raise GadgetError("anchor signs disagree across clauses")

    assignment = []
    for x in range(p["num_vars"]):
        ring = p["variable_rings"][x]
        blk = p["variable_blocks"][x][0]
        e = g.edge_index(blk[0], ring[0])
        if abs(values[e]) != 2:
            raise GadgetError("variable block edge does not carry a double label")
        assignment.append(values[e] == 2)

    result = tuple(assignment)
    f = source_formula(gi)
    if not evaluate(f, result, "one_in_k"):
        raise GadgetError("extracted assignment is not one-in-three satisfying")
    return result
