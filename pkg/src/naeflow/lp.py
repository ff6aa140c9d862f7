"""Exact-rational linear feasibility and the polynomial-time deciders.

On bipartite graphs with no simple cycle of length 2 (mod 4), the 0/1
adjacency matrix is totally unimodular, so the LP relaxations of the
decomposition programs have integral basic solutions: feasibility of the
relaxation decides the combinatorial problem.  Everything here runs over
`fractions.Fraction` with zero tolerance anywhere.

The solver is a phase-1 simplex (artificial variables, Bland's rule): only
feasibility and one basic feasible point are needed, never optimization.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional

from .decomp import Decomposition, verify_nae, verify_one_in_degree
from .errors import PreconditionError
from .graph import Graph, has_cycle_2_mod_4, is_bipartite

Row = tuple[tuple[Fraction, ...], Fraction]  # coefficients >= rhs


@dataclass(frozen=True)
class LinearSystem:
    """Rows `coeffs . x >= rhs` plus closed interval bounds per variable."""

    num_vars: int
    rows: tuple[Row, ...]
    bounds: tuple[tuple[Fraction, Fraction], ...]

    def __init__(self, num_vars: int, rows: Iterable, bounds: Iterable):
        rows = tuple((tuple(Fraction(c) for c in coeffs), Fraction(rhs))
                     for coeffs, rhs in rows)
        bounds = tuple((Fraction(lo), Fraction(hi)) for lo, hi in bounds)
        for coeffs, _ in rows:
            if len(coeffs) != num_vars:
                raise ValueError("row length does not match num_vars")
        if len(bounds) != num_vars:
            raise ValueError("bounds must cover every variable")
        for lo, hi in bounds:
            if lo > hi:
                raise ValueError(f"empty bound interval [{lo}, {hi}]")
        object.__setattr__(self, "num_vars", num_vars)
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "bounds", bounds)

    def satisfies(self, point: tuple[Fraction, ...]) -> bool:
        if len(point) != self.num_vars:
            return False
        for (lo, hi), x in zip(self.bounds, point):
            if not (lo <= x <= hi):
                return False
        for coeffs, rhs in self.rows:
            if sum(c * x for c, x in zip(coeffs, point)) < rhs:
                return False
        return True

    def dump(self) -> str:
        """Plain-text rendering for debugging."""
        out = []
        for coeffs, rhs in self.rows:
            out.append("row: " + " ".join(str(c) for c in coeffs) + f" >= {rhs}")
        for j, (lo, hi) in enumerate(self.bounds):
            out.append(f"bound: {lo} <= x{j} <= {hi}")
        return "\n".join(out) + "\n"


@dataclass(frozen=True)
class FeasibilityResult:
    feasible: bool
    point: Optional[tuple[Fraction, ...]]
    basic: bool


def build_one_in_degree_system(g: Graph) -> LinearSystem:
    """Per vertex v: 1 <= sum of f(u) over N(v) <= 1, with f in [0,1]."""
    zero, one = Fraction(0), Fraction(1)
    rows = []
    for v in range(g.n):
        pos = [zero] * g.n
        for u in g.neighbors(v):
            pos[u] = one
        rows.append((tuple(pos), one))
        rows.append((tuple(-c for c in pos), -one))
    bounds = [(zero, one)] * g.n
    return LinearSystem(g.n, rows, bounds)


def build_nae_system(g: Graph) -> LinearSystem:
    """Per vertex v: 1 <= sum of f(u) over N(v) <= d(v) - 1, with f in [0,1]."""
    zero, one = Fraction(0), Fraction(1)
    rows = []
    for v in range(g.n):
        pos = [zero] * g.n
        for u in g.neighbors(v):
            pos[u] = one
        rows.append((tuple(pos), one))
        rows.append((tuple(-c for c in pos), Fraction(1 - g.degree(v))))
    bounds = [(zero, one)] * g.n
    return LinearSystem(g.n, rows, bounds)


def feasible(sys: LinearSystem) -> FeasibilityResult:
    """Phase-1 simplex over exact rationals; Bland's rule prevents cycling.

    Returns a basic feasible point when one exists.  Variables are shifted
    to y = x - lower so y >= 0; upper bounds become ordinary rows.
    """
    p = sys.num_vars
    lower = [lo for lo, _ in sys.bounds]

    # Collect all rows as  coeffs . y >= rhs.
    ge_rows: list[tuple[list[Fraction], Fraction]] = []
    for coeffs, rhs in sys.rows:
        shifted = rhs - sum(c * l for c, l in zip(coeffs, lower))
        ge_rows.append((list(coeffs), shifted))
    for j, (lo, hi) in enumerate(sys.bounds):
        row = [Fraction(0)] * p
        row[j] = Fraction(-1)
        ge_rows.append((row, lo - hi))

    m = len(ge_rows)
    # Standard form: row . y - s = rhs (slack s >= 0).  Rows with rhs <= 0
    # are negated so the slack itself can start basic; the rest get an
    # artificial variable.
    num_art = sum(1 for _, rhs in ge_rows if rhs > 0)
    width = p + m + num_art
    tableau: list[list[Fraction]] = []
    basis: list[int] = []
    art_cols: list[int] = []
    next_art = p + m
    for i, (coeffs, rhs) in enumerate(ge_rows):
        row = [Fraction(0)] * (width + 1)
        if rhs > 0:
            for j, c in enumerate(coeffs):
                row[j] = c
            row[p + i] = Fraction(-1)
            row[next_art] = Fraction(1)
            row[width] = rhs
            basis.append(next_art)
            art_cols.append(next_art)
            next_art += 1
        else:
            for j, c in enumerate(coeffs):
                row[j] = -c
            row[p + i] = Fraction(1)
            row[width] = -rhs
            basis.append(p + i)
        tableau.append(row)

    art_set = set(art_cols)
    # Objective: minimize the sum of artificials.  Reduced costs after
    # pricing out the initial basis: r_j = c_j - sum over artificial-basic
    # rows of T[i][j], with c_j = 1 exactly on artificial columns.
    obj = [Fraction(0)] * (width + 1)
    for i, b in enumerate(basis):
        if b in art_set:
            for j in range(width + 1):
                obj[j] -= tableau[i][j]
    for a in art_cols:
        obj[a] += 1

    def pivot(r: int, c: int) -> None:
        piv = tableau[r][c]
        inv = 1 / piv
        tableau[r] = [x * inv for x in tableau[r]]
        for i in range(m):
            if i != r and tableau[i][c] != 0:
                factor = tableau[i][c]
                tableau[i] = [a - factor * b for a, b in zip(tableau[i], tableau[r])]
        if obj[c] != 0:
            factor = obj[c]
            for j in range(width + 1):
                obj[j] -= factor * tableau[r][j]
        basis[r] = c

    while True:
        # Artificials never re-enter the basis once out (standard phase-1).
        entering = next((j for j in range(p + m) if obj[j] < 0), None)
        if entering is None:
            break
        ratio_best: Optional[Fraction] = None
        leave = -1
        for i in range(m):
            a = tableau[i][entering]
            if a > 0:
                ratio = tableau[i][width] / a
                if ratio_best is None or ratio < ratio_best or \
                        (ratio == ratio_best and basis[i] < basis[leave]):
                    ratio_best, leave = ratio, i
        if leave == -1:
            # Artificial objective is bounded below by 0, so this cannot
            # happen; guard anyway.
            raise RuntimeError("phase-1 objective unbounded")
        pivot(leave, entering)

    if -obj[width] != 0:
        return FeasibilityResult(False, None, False)

    # Drive leftover artificials (basic at zero) out of the basis so the
    # point is a true basic solution of the original system.
    for i in range(m):
        if basis[i] in art_set:
            col = next((j for j in range(p + m)
                        if j not in art_set and tableau[i][j] != 0), None)
            if col is not None:
                pivot(i, col)
            # Otherwise the row is redundant; its artificial stays at 0.

    y = [Fraction(0)] * (p + m)
    for i, b in enumerate(basis):
        if b < p + m:
            y[b] = tableau[i][width]
    point = tuple(y[j] + lower[j] for j in range(p))
    assert sys.satisfies(point)
    return FeasibilityResult(True, point, True)


def _guard_tu_class(g: Graph, cycle_cap: int) -> None:
    if is_bipartite(g) is None:
        raise PreconditionError("graph is not bipartite")
    report = has_cycle_2_mod_4(g, cycle_cap=cycle_cap)
    if report.has_bad_cycle:
        raise PreconditionError(
            f"cycle of length {len(report.witness)} = 2 (mod 4): {report.witness}")
    if not report.exhausted:
        raise PreconditionError(
            "cycle enumeration hit its cap; cycle-class membership uncertified")


def _decide(g: Graph, sys: LinearSystem, verify) -> Optional[Decomposition]:
    result = feasible(sys)
    if not result.feasible:
        return None
    point = result.point
    if any(x.denominator != 1 for x in point):
        # Total unimodularity guarantees integral basic points on this class.
        raise RuntimeError(f"non-integral basic point on a TU instance: {point}")
    d = Decomposition(v for v in range(g.n) if point[v] == 1)
    assert verify(g, d)
    return d


def decide_one_in_degree_poly(g: Graph, cycle_cap: int = 10 ** 6
                              ) -> Optional[Decomposition]:
    """LP-based decision; only sound on bipartite graphs without cycles of
    length 2 (mod 4), so anything else is rejected up front."""
    _guard_tu_class(g, cycle_cap)
    return _decide(g, build_one_in_degree_system(g), verify_one_in_degree)


def decide_nae_poly(g: Graph, cycle_cap: int = 10 ** 6) -> Optional[Decomposition]:
    _guard_tu_class(g, cycle_cap)
    return _decide(g, build_nae_system(g), verify_nae)
