"""Reduction from 3-partition to weighted 1-in-degree coloring on bipartite
graphs with no cycle of length 2 (mod 4).

For items a_1..a_3n and target k: an item slot x[i][j] (group i, item j)
carries weight a_j; each group has a head (weight 1, adjacent to all its
slots) with a ballast pendant (weight 1-k); each item has a head (weight 1,
adjacent to the item's slot in every group) whose ballast (weight 1-a_j)
leads into a 4-cycle diamond that pins the remaining values.  The head
constraints force every item into exactly one group and force each group's
selection to sum to k; with k/4 < a_j < k/2 a sum of k takes exactly three
items.
"""

from __future__ import annotations

from ..decomp import Decomposition, verify_one_in_degree_weighted
from ..errors import GadgetError, PreconditionError
from ..graph import Graph, VertexWeightedGraph, degree_profile, has_cycle_2_mod_4, \
    is_bipartite
from .base import GadgetInstance, Provenance


def _check_instance(a: list[int], k: int) -> int:
    if len(a) % 3 != 0 or not a:
        raise PreconditionError("item count must be a positive multiple of 3")
    n = len(a) // 3
    if sum(a) != n * k:
        raise PreconditionError(f"items sum to {sum(a)}, expected {n * k}")
    for val in a:
        if not (4 * val > k and 2 * val < k):
            raise PreconditionError(f"item {val} outside the open range (k/4, k/2)")
    return n


def gen_three_partition_graph(a: list[int], k: int) -> GadgetInstance:
    n = _check_instance(a, k)
    roles: list[Provenance] = []
    weights: list[int] = []
    edges: list[tuple[int, int]] = []

    def vertex(role: str, source: str, weight: int) -> int:
        v = len(roles)
        roles.append(Provenance(v, role, source))
        weights.append(weight)
        return v

    slots = [[vertex("item_slot", f"i{i},j{j}", a[j]) for j in range(3 * n)]
             for i in range(n)]
    group_heads = []
    group_ballasts = []
    for i in range(n):
        head = vertex("group_head", f"i{i}", 1)
        ballast = vertex("group_ballast", f"i{i}", 1 - k)
        edges.append((head, ballast))
        edges += [(head, slots[i][j]) for j in range(3 * n)]
        group_heads.append(head)
        group_ballasts.append(ballast)
    item_heads = []
    diamonds = []
    for j in range(3 * n):
        head = vertex("item_head", f"j{j}", 1)
        ballast = vertex("item_ballast", f"j{j}", 1 - a[j])
        d_a = vertex("diamond_a", f"j{j}", 1)
        d_b = vertex("diamond_b", f"j{j}", 1)
        top = vertex("diamond_top", f"j{j}", a[j])
        edges += [(head, ballast), (ballast, d_a), (ballast, d_b),
                  (d_a, top), (d_b, top)]
        edges += [(head, slots[i][j]) for i in range(n)]
        item_heads.append(head)
        diamonds.append([ballast, d_a, d_b, top])

    graph = VertexWeightedGraph(Graph(len(roles), edges), weights)
    if is_bipartite(graph.graph) is None:
        raise GadgetError("gadget is not bipartite")
    report = has_cycle_2_mod_4(graph.graph)
    if report.has_bad_cycle or not report.exhausted:
        raise GadgetError(f"gadget cycle-class validation failed: {report}")

    params = {
        "kind": "three-partition-gadget",
        "items": list(a),
        "target": k,
        "groups": n,
        "slots": slots,
        "group_heads": group_heads,
        "group_ballasts": group_ballasts,
        "item_heads": item_heads,
        "diamonds": diamonds,
    }
    return GadgetInstance(graph, tuple(roles), params)


def partition_from_coloring(gi: GadgetInstance, d: Decomposition) -> list[list[int]]:
    """Read the groups off a valid weighted coloring: group i collects the
    item indices whose slot x[i][j] is selected.  Returns index triples."""
    wg = gi.graph
    if not verify_one_in_degree_weighted(wg, d):
        raise PreconditionError("not a valid weighted 1-in-degree coloring")
    p = gi.params
    a, k, n = p["items"], p["target"], p["groups"]
    parts = [[j for j in range(3 * n) if p["slots"][i][j] in d.vertices]
             for i in range(n)]
    flat = sorted(j for part in parts for j in part)
    if flat != list(range(3 * n)):
        raise GadgetError("selected slots do not partition the items")
    for part in parts:
        if len(part) != 3 or sum(a[j] for j in part) != k:
            raise GadgetError(f"group {part} does not sum to {k} over 3 items")
    return parts


def coloring_from_partition(gi: GadgetInstance,
                            parts: list[list[int]]) -> Decomposition:
    """Forward witness from index triples: select the partition's slots, all
    group heads and ballasts, the item ballasts and diamond tops, and one
    diamond side (the first) per item."""
    p = gi.params
    a, k, n = p["items"], p["target"], p["groups"]
    flat = sorted(j for part in parts for j in part)
    if flat != list(range(3 * n)):
        raise PreconditionError("parts must partition the item indices")
    for part in parts:
        if sum(a[j] for j in part) != k:
            raise PreconditionError(f"part {part} does not sum to {k}")

    chosen: list[int] = []
    for i, part in enumerate(parts):
        chosen += [p["slots"][i][j] for j in part]
    chosen += p["group_heads"] + p["group_ballasts"]
    for j in range(3 * n):
        ballast, d_a, _, top = p["diamonds"][j]
        chosen += [ballast, d_a, top]
    d = Decomposition(chosen)
    if not verify_one_in_degree_weighted(gi.graph, d):
        raise GadgetError("forward witness failed verification")
    return d
