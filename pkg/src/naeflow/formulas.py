"""Monotone formulas, instance validators, and brute-force SAT oracles.

A PositiveFormula has no representable negation: clauses are plain variable
lists.  The two satisfaction predicates used throughout are

  one_in_k: every clause has exactly one true member,
  nae:      every clause has at least one true and at least one false member.

The solvers are exact and deterministic (lexicographically first witness,
trying True before False per variable), with a configurable size bound:
they exist to certify reductions at desk scale, not to scale.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from .errors import FormatError, PreconditionError
from .graph import Graph, is_bipartite, is_planar

Assignment = tuple[bool, ...]

BRUTE_FORCE_VAR_BOUND = 26


@dataclass(frozen=True)
class PositiveFormula:
    num_vars: int
    clauses: tuple[tuple[int, ...], ...]

    def __init__(self, num_vars: int, clauses: Iterable[Iterable[int]]):
        if num_vars < 0:
            raise ValueError("num_vars must be non-negative")
        canon = []
        for clause in clauses:
            members = tuple(sorted(clause))
            for x in members:
                if not isinstance(x, int) or not (0 <= x < num_vars):
                    raise ValueError(f"variable {x!r} out of range")
            if len(set(members)) != len(members):
                raise ValueError(f"duplicate variable in clause {members}")
            canon.append(members)
        object.__setattr__(self, "num_vars", num_vars)
        object.__setattr__(self, "clauses", tuple(canon))

    @property
    def num_clauses(self) -> int:
        return len(self.clauses)

    def occurrence_counts(self) -> list[int]:
        counts = [0] * self.num_vars
        for clause in self.clauses:
            for x in clause:
                counts[x] += 1
        return counts


def evaluate(f: PositiveFormula, assignment: Assignment, mode: str) -> bool:
    """Clause-wise evaluation under the given predicate ('one_in_k' or 'nae')."""
    if len(assignment) != f.num_vars:
        raise ValueError("assignment arity does not match formula")
    if mode not in ("one_in_k", "nae"):
        raise ValueError(f"unknown mode {mode!r}")
    for clause in f.clauses:
        true_count = sum(1 for x in clause if assignment[x])
        if mode == "one_in_k":
            if true_count != 1:
                return False
        else:
            if true_count == 0 or true_count == len(clause):
                return False
    return True


def _search(f: PositiveFormula, mode: str, max_vars: int) -> Optional[Assignment]:
    """Exact DFS over assignments in lexicographic order (True before False).

    Prunes clauses as they become decided, which keeps the search equivalent
    to full enumeration while handling padded instances with ~25 variables.
    """
    if f.num_vars > max_vars:
        raise PreconditionError(
            f"{f.num_vars} variables exceed the brute-force bound {max_vars}")
    clauses = f.clauses
    sizes = [len(c) for c in clauses]
    watch: list[list[int]] = [[] for _ in range(f.num_vars)]
    for ci, clause in enumerate(clauses):
        for x in clause:
            watch[x].append(ci)
    true_cnt = [0] * len(clauses)
    decided = [0] * len(clauses)
    values: list[bool] = [False] * f.num_vars

    def clause_ok(ci: int) -> bool:
        # Can clause ci still satisfy the predicate given the partial assignment?
        t, d, s = true_cnt[ci], decided[ci], sizes[ci]
        rest = s - d
        if mode == "one_in_k":
            return t <= 1 and t + rest >= 1
        # NAE: a true is still reachable, and a false is still reachable.
        return t + rest >= 1 and s - t >= 1

    def assign(x: int, value: bool) -> bool:
        values[x] = value
        ok = True
        for ci in watch[x]:
            decided[ci] += 1
            if value:
                true_cnt[ci] += 1
            if ok and not clause_ok(ci):
                ok = False
        return ok

    def unassign(x: int, value: bool) -> None:
        for ci in watch[x]:
            decided[ci] -= 1
            if value:
                true_cnt[ci] -= 1

    def dfs(x: int) -> bool:
        if x == f.num_vars:
            return True
        for value in (True, False):
            if assign(x, value):
                if dfs(x + 1):
                    return True
            unassign(x, value)
        return False

    # Empty clauses can never satisfy either predicate.
    if any(s == 0 for s in sizes):
        return None
    if dfs(0):
        return tuple(values)
    return None


def solve_one_in_k(f: PositiveFormula,
                   max_vars: int = BRUTE_FORCE_VAR_BOUND) -> Optional[Assignment]:
    """First assignment with exactly one true member per clause, or None."""
    return _search(f, "one_in_k", max_vars)


def solve_nae(f: PositiveFormula,
              max_vars: int = BRUTE_FORCE_VAR_BOUND) -> Optional[Assignment]:
    """First assignment with both truth values in every clause, or None."""
    return _search(f, "nae", max_vars)


def incidence_graph(f: PositiveFormula) -> tuple[Graph, tuple[str, ...]]:
    """Bipartite variable/clause graph: edge iff the variable is in the clause.

    Vertices 0..num_vars-1 are variables; the clause vertices follow in
    clause order.  Returns the graph and a role tag per vertex.
    """
    n = f.num_vars + f.num_clauses
    edges = []
    for ci, clause in enumerate(f.clauses):
        cv = f.num_vars + ci
        edges += [(x, cv) for x in clause]
    roles = ("variable",) * f.num_vars + ("clause",) * f.num_clauses
    return Graph(n, edges), roles


def validate_cubic_planar(f: PositiveFormula) -> tuple[bool, list[str]]:
    """Every clause of size 3, every variable in exactly 3 clauses, and the
    incidence graph planar."""
    problems = []
    for ci, clause in enumerate(f.clauses):
        if len(clause) != 3:
            problems.append(f"clause {ci} has size {len(clause)}, expected 3")
    for x, count in enumerate(f.occurrence_counts()):
        if count != 3:
            problems.append(f"variable {x} occurs {count} times, expected 3")
    if not problems:
        g, _ = incidence_graph(f)
        if not is_planar(g):
            problems.append("incidence graph is not planar")
    return (not problems, problems)


@dataclass(frozen=True)
class TreeLikeInstance:
    """A monotone formula plus clause-clause edges forming a spanning tree,
    with the combined (incidence + tree) graph planar."""

    formula: PositiveFormula
    clause_tree_edges: tuple[tuple[int, int], ...]

    def __init__(self, formula: PositiveFormula,
                 clause_tree_edges: Iterable[tuple[int, int]]):
        edges = tuple(sorted((min(a, b), max(a, b)) for a, b in clause_tree_edges))
        m = formula.num_clauses
        if m == 0:
            raise ValueError("instance needs at least one clause")
        for a, b in edges:
            if not (0 <= a < m and 0 <= b < m) or a == b:
                raise ValueError(f"bad clause tree edge {(a, b)}")
        if len(set(edges)) != len(edges):
            raise ValueError("duplicate clause tree edge")
        if len(edges) != m - 1:
            raise ValueError(f"{len(edges)} tree edges cannot span {m} clauses")
        adj: list[list[int]] = [[] for _ in range(m)]
        for a, b in edges:
            adj[a].append(b)
            adj[b].append(a)
        seen = {0}
        stack = [0]
        while stack:
            v = stack.pop()
            for w in adj[v]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        if len(seen) != m:
            raise ValueError("clause tree edges do not connect all clauses")
        object.__setattr__(self, "formula", formula)
        object.__setattr__(self, "clause_tree_edges", edges)
        if not is_planar(combined_graph(self)):
            raise ValueError("combined incidence + clause-tree graph is not planar")

    def gamma(self) -> tuple[int, ...]:
        """Tree degree of each clause vertex."""
        degs = [0] * self.formula.num_clauses
        for a, b in self.clause_tree_edges:
            degs[a] += 1
            degs[b] += 1
        return tuple(degs)


def combined_graph(t: TreeLikeInstance) -> Graph:
    """Incidence graph plus the clause-clause tree edges."""
    g, _ = incidence_graph(t.formula)
    nv = t.formula.num_vars
    extra = [(nv + a, nv + b) for a, b in t.clause_tree_edges]
    return Graph(g.n, list(g.edges) + extra)


# ---------------------------------------------------------------------------
# Serialization
# ---------------------------------------------------------------------------

def formula_to_dict(f: PositiveFormula) -> dict:
    return {"num_vars": f.num_vars, "clauses": [list(c) for c in f.clauses]}


def formula_from_dict(doc: dict) -> PositiveFormula:
    if not isinstance(doc, dict) or "num_vars" not in doc or "clauses" not in doc:
        raise FormatError("formula document needs 'num_vars' and 'clauses'")
    try:
        return PositiveFormula(doc["num_vars"], doc["clauses"])
    except (TypeError, ValueError) as exc:
        raise FormatError(str(exc)) from exc


def formula_to_text(f: PositiveFormula) -> str:
    """Monotone DIMACS-like text: 'p mcnf V C' then 1-based clauses ending in 0."""
    lines = [f"p mcnf {f.num_vars} {f.num_clauses}"]
    lines += [" ".join(str(x + 1) for x in clause) + " 0" for clause in f.clauses]
    return "\n".join(lines) + "\n"


def formula_from_text(text: str) -> PositiveFormula:
    num_vars = None
    clauses = []
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("c"):
            continue
        if line.startswith("p"):
            parts = line.split()
            if len(parts) != 4 or parts[1] != "mcnf":
                raise FormatError(f"bad problem line: {line!r}")
            num_vars = int(parts[2])
            continue
        ids = [int(x) for x in line.split()]
        if not ids or ids[-1] != 0:
            raise FormatError(f"clause line must end with 0: {line!r}")
        if any(x <= 0 for x in ids[:-1]):
            raise FormatError(f"monotone clauses use positive 1-based ids: {line!r}")
        clauses.append([x - 1 for x in ids[:-1]])
    if num_vars is None:
        raise FormatError("missing 'p mcnf' header")
    try:
        return PositiveFormula(num_vars, clauses)
    except ValueError as exc:
        raise FormatError(str(exc)) from exc
