"""Reduction from cubic monotone instances to 1-in-degree decomposition on
r-regular bipartite graphs.

Step 1 (`pad_formula`) widens a cubic instance to clause size r and
occurrence count r: take r*(r-2) disjoint copies, add (r-3)*s filler
groups whose clauses admit exactly one satisfying pattern (first filler
variable true, all others false), and pad every copied clause with r-3
distinct filler variables drawn from the groups' spare occurrence slots.
The spare capacities tile exactly, and the forced pattern makes the padded
formula satisfiable iff the original is.

Step 2 (`gen_regular_bipartite`) builds, per variable, r levels of an
r-slot ring: slot -> fan -> core -> link -> next slot, with a collector per
(level, position) tied across levels, then joins each clause's level-k port
to one slot of each member variable (occurrence order picks the position).
The result is r-regular and bipartite; a decomposition is forced to be
constant across each variable's slots, which is what carries assignments
back and forth.
"""

from __future__ import annotations

from ..decomp import Decomposition, verify_one_in_degree
from ..errors import GadgetError, PreconditionError
from ..formulas import Assignment, PositiveFormula, evaluate
from ..graph import Graph, degree_profile, is_bipartite
from .base import GadgetInstance, Provenance


def _require_cubic(f: PositiveFormula) -> None:
    problems = []
    for ci, clause in enumerate(f.clauses):
        if len(clause) != 3:
            problems.append(f"clause {ci} has size {len(clause)}")
    for x, cnt in enumerate(f.occurrence_counts()):
        if cnt != 3:
            problems.append(f"variable {x} occurs {cnt} times")
    if problems:
        raise PreconditionError("; ".join(problems))


def pad_formula(f: PositiveFormula, r: int) -> PositiveFormula:
    """Pad a cubic instance so every clause has r members and every variable
    occurs in exactly r clauses; satisfiability (one true per clause) is
    preserved in both directions."""
    if r < 3:
        raise PreconditionError("r must be at least 3")
    _require_cubic(f)
    nv, s = f.num_vars, f.num_clauses
    copies = r * (r - 2)
    clauses = []
    for t in range(copies):
        base = t * nv
        clauses += [[base + x for x in clause] for clause in f.clauses]
    if r == 3:
        return PositiveFormula(copies * nv, clauses)

    num_groups = (r - 3) * s
    group_base = copies * nv
    spare_slots: list[int] = []
    filler_clauses: list[list[int]] = []
    for j in range(num_groups):
        first = group_base + j * 2 * (r - 1)
        alphas = [first + i for i in range(r - 1)]
        epsilons = [first + (r - 1) + i for i in range(r - 1)]
        for eps in epsilons:
            filler_clauses.append([eps] + alphas)
        filler_clauses.append([alphas[0]] + epsilons)
        # Spare occurrence capacity: one per later alpha, r-2 per epsilon;
        # consecutive slots stay distinct because each pass lists r-1
        # different variables and the padding window has length r-3.
        spare_slots += alphas[1:]
        for _ in range(r - 2):
            spare_slots += epsilons

    need = len(clauses) * (r - 3)
    if len(spare_slots) != need:
        raise GadgetError(f"padding capacity {len(spare_slots)} != demand {need}")
    pos = 0
    for clause in clauses:
        clause += spare_slots[pos:pos + r - 3]
        pos += r - 3
    total_vars = group_base + num_groups * 2 * (r - 1)
    return PositiveFormula(total_vars, clauses + filler_clauses)


def _require_uniform(f: PositiveFormula, r: int) -> None:
    problems = []
    for ci, clause in enumerate(f.clauses):
        if len(clause) != r:
            problems.append(f"clause {ci} has size {len(clause)}, expected {r}")
    for x, cnt in enumerate(f.occurrence_counts()):
        if cnt != r:
            problems.append(f"variable {x} occurs {cnt} times, expected {r}")
    if problems:
        raise PreconditionError("; ".join(problems))


def gen_regular_bipartite(fp: PositiveFormula, r: int) -> GadgetInstance:
    if r < 3:
        raise PreconditionError("r must be at least 3")
    _require_uniform(fp, r)
    nv, m = fp.num_vars, fp.num_clauses

    roles: list[Provenance] = []
    edges: list[tuple[int, int]] = []

    def vertex(role: str, source: str) -> int:
        v = len(roles)
        roles.append(Provenance(v, role, source))
        return v

    slots, fans, cores, links, collectors, ties = [], [], [], [], [], []
    for x in range(nv):
        src = f"x{x}"
        slots.append([[vertex("slot", src) for _ in range(r)] for _ in range(r)])
        fans.append([[[vertex("fan", src) for _ in range(r - 2)]
                      for _ in range(r)] for _ in range(r)])
        cores.append([[[vertex("core", src) for _ in range(r - 1)]
                       for _ in range(r)] for _ in range(r)])
        links.append([[vertex("link", src) for _ in range(r)] for _ in range(r)])
        collectors.append([[vertex("collector", src) for _ in range(r)]
                           for _ in range(r)])
        ties.append([vertex("tie", src) for _ in range(r)])
    clause_ports = [[vertex("clause_port", f"c{c}") for _ in range(r)]
                    for c in range(m)]

    for x in range(nv):
        for k in range(r):
            for j in range(r):
                slot = slots[x][k][j]
                link = links[x][k][j]
                collector = collectors[x][k][j]
                for fan in fans[x][k][j]:
                    edges.append((slot, fan))
                    for core in cores[x][k][j]:
                        edges.append((fan, core))
                for core in cores[x][k][j]:
                    edges.append((core, link))
                    edges.append((collector, core))
                edges.append((link, slots[x][k][(j + 1) % r]))
                edges.append((collector, ties[x][j]))

    # Clause hookup: the i-th clause containing x (clause order) takes the
    # slot at position i, at every level.
    occurrence_index = [0] * nv
    hookup: list[list[list[int]]] = [[] for _ in range(m)]
    for c, clause in enumerate(fp.clauses):
        for x in clause:
            i = occurrence_index[x]
            occurrence_index[x] += 1
            if i >= r:
                raise GadgetError(f"variable {x} exceeded {r} occurrences")
            hookup[c].append([x, i])
            for k in range(r):
                edges.append((clause_ports[c][k], slots[x][k][i]))

    graph = Graph(len(roles), [(min(u, v), max(u, v)) for u, v in edges])
    profile = degree_profile(graph)
    if profile.regular != r:
        raise GadgetError(f"gadget is not {r}-regular: {profile}")
    if is_bipartite(graph) is None:
        raise GadgetError("gadget is not bipartite")

    params = {
        "kind": "regular-bipartite-gadget",
        "r": r,
        "num_vars": nv,
        "clauses": [list(c) for c in fp.clauses],
        "slots": slots,
        "fans": fans,
        "cores": cores,
        "links": links,
        "collectors": collectors,
        "ties": ties,
        "clause_ports": clause_ports,
        "hookup": hookup,
    }
    return GadgetInstance(graph, tuple(roles), params)


def source_formula(gi: GadgetInstance) -> PositiveFormula:
    return PositiveFormula(gi.params["num_vars"], gi.params["clauses"])


def decomposition_from_assignment(gi: GadgetInstance, a: Assignment) -> Decomposition:
    """Forward witness: the distinguished part contains a variable's slots and
    ties exactly when the variable is true, the first core of each bundle
    when it is false, plus the level-(r-1) collectors and clause ports and
    the links of every other level."""
    fp = source_formula(gi)
    if not evaluate(fp, a, "one_in_k"):
        raise PreconditionError("assignment does not satisfy one-in-r")
    p = gi.params
    r = p["r"]
    part: list[int] = []
    for x in range(p["num_vars"]):
        for k in range(r):
            for j in range(r):
                if a[x]:
                    part.append(p["slots"][x][k][j])
                else:
                    part.append(p["cores"][x][k][j][0])
                if k == r - 1:
                    part.append(p["collectors"][x][k][j])
                else:
                    part.append(p["links"][x][k][j])
        if a[x]:
            part += p["ties"][x]
    for c in range(len(p["clauses"])):
        part.append(p["clause_ports"][c][r - 1])
    d = Decomposition(part)
    g = gi.base_graph()
    assert verify_one_in_degree(g, d), "forward witness failed verification"
    return d


def assignment_from_decomposition(gi: GadgetInstance, d: Decomposition) -> Assignment:
    """Backward witness: a valid decomposition is constant on each variable's
    slots within a level, so reading one slot per variable suffices."""
    g = gi.base_graph()
    if not verify_one_in_degree(g, d):
        raise PreconditionError("not a valid 1-in-degree decomposition")
    p = gi.params
    result = tuple(p["slots"][x][1][0] in d.vertices
                   for x in range(p["num_vars"]))
    fp = source_formula(gi)
    if not evaluate(fp, result, "one_in_k"):
        raise GadgetError("extracted assignment is not one-in-r satisfying")
    return result
