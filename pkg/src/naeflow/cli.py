"""Command-line front end: solve / check / gen / verify / sweep.

Exit codes: 0 = found or predicate true, 1 = none or predicate false,
2 = error (bad input, violated precondition, timeout).  Every invocation
prints a machine-readable run report to stdout; witnesses go to separate
files and identical invocations produce byte-identical witness files.
"""

from __future__ import annotations

import argparse
import hashlib
import itertools
import json
import sys
import time
from typing import Optional

from . import decomp, edgecolor, flows, formats, formulas
from .errors import FormatError, GadgetError, PreconditionError, SolveTimeout
from .gadgets import (base as gadget_base, bipartition, flowgadget, regular,
                      threepartition, treelike)
from .graph import (Graph, VertexWeightedGraph, connected_components,
                    degree_profile, has_cycle_2_mod_4, is_bipartite,
                    kuratowski_evidence, odd_cycle, planar_embedding)

FOUND, NONE, ERROR = 0, 1, 2

SWEEP_MAX_N = 14


def _digest(path: Optional[str]) -> Optional[str]:
    if path is None:
        return None
    try:
        with open(path, "rb") as fh:
            return "sha256:" + hashlib.sha256(fh.read()).hexdigest()
    except OSError:
        return None


def _report(args, status: str, started: float, witness: Optional[str] = None,
            stats: Optional[dict] = None, detail=None) -> None:
    doc = {
        "command": sys.argv[1:] if sys.argv[1:] else [],
        "input_digest": _digest(getattr(args, "input", None)),
        "status": status,
        "witness": witness,
        "wall_time_s": round(time.monotonic() - started, 6),
        "stats": stats or {},
    }
    if detail is not None:
        doc["detail"] = detail
    print(json.dumps(doc, sort_keys=True))


def _deadline(args) -> Optional[float]:
    if getattr(args, "time_limit", None) is None:
        return None
    return time.monotonic() + args.time_limit


def _load_plain_graph(path: Optional[str]) -> Graph:
    if path is None:
        raise FormatError("missing --input")
    g = formats.load_graph(path)
    if isinstance(g, VertexWeightedGraph):
        return g.graph
    return g


def _load_weighted_graph(path: Optional[str]) -> VertexWeightedGraph:
    if path is None:
        raise FormatError("missing --input")
    g = formats.load_graph(path)
    if not isinstance(g, VertexWeightedGraph):
        raise FormatError("this problem needs a graph with 'weights'")
    return g


def _write_witness(args, doc: dict, suffix: str) -> str:
    path = args.output or (args.input + suffix if args.input else "witness" + suffix)
    formats.save_json(path, doc)
    return path


# ---------------------------------------------------------------------------
# solve
# ---------------------------------------------------------------------------

def cmd_solve(args) -> int:
    started = time.monotonic()
    stats: dict = {}
    deadline = _deadline(args)
    problem = args.problem
    try:
        if problem == "nae":
            g = _load_plain_graph(args.input)
            d = decomp.solve_nae(g, stats=stats, deadline=deadline)
            witness = None if d is None else _write_witness(
                args, formats.part_to_dict(d.vertices), ".nae.json")
        elif problem == "one-in-degree":
            g = _load_plain_graph(args.input)
            d = decomp.solve_one_in_degree(g, stats=stats, deadline=deadline)
            witness = None if d is None else _write_witness(
                args, formats.part_to_dict(d.vertices), ".oid.json")
        elif problem == "one-in-degree-weighted":
            wg = _load_weighted_graph(args.input)
            d = decomp.solve_one_in_degree_weighted(wg, stats=stats,
                                                    deadline=deadline)
            witness = None if d is None else _write_witness(
                args, formats.part_to_dict(d.vertices), ".oidw.json")
        elif problem == "zero-sum-flow":
            g = _load_plain_graph(args.input)
            d = flows.solve_zero_sum(g, args.k, stats=stats, deadline=deadline)
            witness = None if d is None else _write_witness(
                args, formats.labels_to_dict(d.labels), ".flow.json")
        elif problem == "vertex-flow":
            g = _load_plain_graph(args.input)
            d = flows.solve_vertex_zero_sum(g, args.k, stats=stats,
                                            deadline=deadline)
            witness = None if d is None else _write_witness(
                args, formats.labels_to_dict(d.labels), ".vflow.json")
        elif problem == "nae-edge":
            g = _load_plain_graph(args.input)
            d = edgecolor.nae_edge_coloring(g)
            witness = None if d is None else _write_witness(
                args, formats.colors_to_dict(d.colors), ".colors.json")
        elif problem == "perfect-matching":
            g = _load_plain_graph(args.input)
            d = edgecolor.one_in_degree_edge(g)
            witness = None if d is None else _write_witness(
                args, formats.matching_to_dict(d.edges), ".matching.json")
        elif problem == "min-edge-deletion":
            g = _load_plain_graph(args.input)
            count, deleted = bipartition.min_edge_deletion_bipartition(
                g, stats=stats, deadline=deadline)
            doc = {"count": count, "edges": [list(e) for e in sorted(deleted)]}
            witness = _write_witness(args, doc, ".deletion.json")
            _report(args, "found", started, witness, stats, detail={"count": count})
            return FOUND
        else:
            raise FormatError(f"unknown problem {problem!r}")
    except (FormatError, PreconditionError, GadgetError, SolveTimeout,
            OSError) as exc:
        _report(args, "error", started, detail=str(exc))
        return ERROR
    if witness is None:
        _report(args, "none", started, None, stats)
        return NONE
    _report(args, "found", started, witness, stats)
    return FOUND


# ---------------------------------------------------------------------------
# check
# ---------------------------------------------------------------------------

def cmd_check(args) -> int:
    started = time.monotonic()
    try:
        g = _load_plain_graph(args.input)
        predicate = args.predicate
        if predicate == "bipartite":
            sides = is_bipartite(g)
            if sides is not None:
                detail = {"left": sorted(sides.left), "right": sorted(sides.right)}
                _report(args, "found", started, detail=detail)
                return FOUND
            _report(args, "none", started, detail={"odd_cycle": odd_cycle(g)})
            return NONE
        if predicate == "regular":
            profile = degree_profile(g)
            ok = profile.regular is not None and \
                (args.r is None or profile.regular == args.r)
            _report(args, "found" if ok else "none", started,
                    detail={"delta": profile.delta, "Delta": profile.Delta})
            return FOUND if ok else NONE
        if predicate == "semiregular":
            profile = degree_profile(g)
            ok = profile.semiregular is not None
            _report(args, "found" if ok else "none", started,
                    detail={"delta": profile.delta, "Delta": profile.Delta})
            return FOUND if ok else NONE
        if predicate == "planar":
            evidence = kuratowski_evidence(g)
            if evidence is None:
                emb = planar_embedding(g)
                detail = {"rotation": {str(v): ws for v, ws in sorted(emb.items())}}
                _report(args, "found", started, detail=detail)
                return FOUND
            _report(args, "none", started,
                    detail={"kuratowski_edges": [list(e) for e in evidence]})
            return NONE
        if predicate == "cycle-mod4":
            report = has_cycle_2_mod_4(g, cycle_cap=args.cycle_cap)
            detail = {
                "witness": list(report.witness) if report.witness else None,
                "cycles_enumerated": report.cycles_enumerated,
                "exhausted": report.exhausted,
            }
            _report(args, "found" if report.has_bad_cycle else "none",
                    started, detail=detail)
            return FOUND if report.has_bad_cycle else NONE
        raise FormatError(f"unknown predicate {predicate!r}")
    except (FormatError, PreconditionError, OSError) as exc:
        _report(args, "error", started, detail=str(exc))
        return ERROR


# ---------------------------------------------------------------------------
# gen
# ---------------------------------------------------------------------------

def _write_gadget(args, gi, default_suffix: str, started, extra_detail=None) -> int:
    path = args.output or ((args.input or "gadget") + default_suffix)
    formats.save_json(path, gadget_base.gadget_to_dict(gi))
    written = [path]
    if args.format == "dot":
        dot_path = path + ".dot"
        with open(dot_path, "w", encoding="utf-8") as fh:
            fh.write(formats.graph_to_dot(gi.graph))
        written.append(dot_path)
    g = gi.base_graph()
    detail = {"vertices": g.n, "edges": len(g.edges), "files": written}
    if extra_detail:
        detail.update(extra_detail)
    _report(args, "found", started, path, detail=detail)
    return FOUND


def cmd_gen(args) -> int:
    started = time.monotonic()
    try:
        kind = args.reduction
        if kind == "tree-like":
            f = formulas.formula_from_dict(formats.load_json(args.input))
            t = treelike.make_tree_like(f)
            doc = {
                "formula": formulas.formula_to_dict(f),
                "clause_tree_edges": [list(e) for e in t.clause_tree_edges],
            }
            path = args.output or (args.input + ".treelike.json")
            formats.save_json(path, doc)
            _report(args, "found", started, path,
                    detail={"gamma": list(t.gamma())})
            return FOUND
        if kind == "zero-sum":
            f = formulas.formula_from_dict(formats.load_json(args.input))
            t = treelike.make_tree_like(f)
            gi = flowgadget.gen_zero_sum_instance(t)
            return _write_gadget(args, gi, ".zerosum.json", started)
        if kind == "regular-bipartite":
            f = formulas.formula_from_dict(formats.load_json(args.input))
            r = args.r or 3
            counts = f.occurrence_counts()
            uniform = all(len(c) == r for c in f.clauses) and \
                all(c == r for c in counts)
            padded = f if uniform else regular.pad_formula(f, r)
            gi = regular.gen_regular_bipartite(padded, r)
            return _write_gadget(args, gi, ".regular.json", started,
                                 extra_detail={"padded": not uniform})
        if kind == "three-partition":
            if not args.a:
                raise FormatError("three-partition needs --a ITEMS")
            items = [int(x) for x in args.a.split(",")]
            if args.k is None:
                raise FormatError("three-partition needs --k TARGET")
            gi = threepartition.gen_three_partition_graph(items, args.k)
            return _write_gadget(args, gi, ".3partition.json", started)
        if kind == "bipartition":
            f = formulas.formula_from_dict(formats.load_json(args.input))
            gi = bipartition.gen_bipartition_instance(f)
            return _write_gadget(args, gi, ".bipartition.json", started)
        raise FormatError(f"unknown reduction {kind!r}")
    except (FormatError, PreconditionError, GadgetError, OSError,
            ValueError) as exc:
        _report(args, "error", started, detail=str(exc))
        return ERROR


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------

def cmd_verify(args) -> int:
    started = time.monotonic()
    try:
        kind = args.kind
        doc = formats.load_json(args.witness)
        if kind in ("one-in-degree", "nae"):
            g = _load_plain_graph(args.input)
            d = decomp.Decomposition(formats.part_from_dict(doc))
            ok = decomp.verify_one_in_degree(g, d) if kind == "one-in-degree" \
                else decomp.verify_nae(g, d)
        elif kind == "one-in-degree-weighted":
            wg = _load_weighted_graph(args.input)
            d = decomp.Decomposition(formats.part_from_dict(doc))
            ok = decomp.verify_one_in_degree_weighted(wg, d)
        elif kind == "zero-sum-flow":
            g = _load_plain_graph(args.input)
            lab = flows.EdgeLabeling(formats.labels_from_dict(doc))
            ok = flows.verify_zero_sum(g, lab, args.k)
        elif kind == "vertex-flow":
            g = _load_plain_graph(args.input)
            lab = flows.VertexLabeling(formats.labels_from_dict(doc))
            ok = flows.verify_vertex_zero_sum(g, lab, args.k)
        elif kind == "nae-edge":
            g = _load_plain_graph(args.input)
            col = edgecolor.TwoEdgeColoring(formats.colors_from_dict(doc))
            ok = edgecolor.verify_nae_edge(g, col)
        elif kind == "perfect-matching":
            g = _load_plain_graph(args.input)
            edges = formats.matching_from_dict(doc)
            for u, v in edges:
                if not g.has_edge(u, v):
                    raise FormatError(f"matching edge {(u, v)} not in graph")
            matching = edgecolor.Matching(edges)
            ok = 2 * len(matching.edges) == g.n
        else:
            raise FormatError(f"unknown witness kind {kind!r}")
    except (FormatError, PreconditionError, ValueError, OSError) as exc:
        _report(args, "error", started, detail=str(exc))
        return ERROR
    _report(args, "found" if ok else "infeasible", started)
    return FOUND if ok else NONE


# ---------------------------------------------------------------------------
# sweep
# ---------------------------------------------------------------------------

def iter_cubic_bipartite(half: int):
    """Connected 3-regular bipartite graphs with `half` vertices per side.

    Filtered enumeration: left vertices choose 3-subsets of the right side
    in non-decreasing lexicographic order (a cheap symmetry cut); right
    degrees are capped at 3 during the search.
    """
    triples = list(itertools.combinations(range(half), 3))

    def rec(row: int, chosen: list[int], loads: list[int]):
        if row == half:
            if all(load == 3 for load in loads):
                yield list(chosen)
            return
        start = chosen[-1] if chosen else 0
        rows_left_after = half - row - 1
        for ti in range(start, len(triples)):
            t = triples[ti]
            if all(loads[x] < 3 for x in t):
                for x in t:
                    loads[x] += 1
                # A later row meets any right vertex at most once, so every
                # remaining deficit must fit in the rows still to come.
                if all(3 - load <= rows_left_after for load in loads):
                    chosen.append(ti)
                    yield from rec(row + 1, chosen, loads)
                    chosen.pop()
                for x in t:
                    loads[x] -= 1
        return

    for assignment in rec(0, [], [0] * half):
        edges = []
        for li, ti in enumerate(assignment):
            for rv in triples[ti]:
                edges.append((li, half + rv))
        g = Graph(2 * half, edges)
        if len(connected_components(g)) == 1:
            yield g


def cmd_sweep(args) -> int:
    started = time.monotonic()
    if args.family != "cubic-bipartite-nae":
        _report(args, "error", started, detail=f"unknown family {args.family!r}")
        return ERROR
    if args.max_n > SWEEP_MAX_N:
        _report(args, "error", started,
                detail=f"--max-n {args.max_n} exceeds the bound {SWEEP_MAX_N}")
        return ERROR
    deadline = _deadline(args)
    counts = {}
    counterexamples = []
    try:
        for n in range(6, args.max_n + 1, 2):
            half = n // 2
            if half < 3:
                continue
            seen = 0
            for g in iter_cubic_bipartite(half):
                seen += 1
                if decomp.solve_nae(g, deadline=deadline) is None:
                    counterexamples.append(formats.graph_to_dict(g))
            counts[str(n)] = seen
    except SolveTimeout as exc:
        _report(args, "error", started, detail=str(exc))
        return ERROR
    doc = {
        "family": args.family,
        "max_n": args.max_n,
        "instances": counts,
        "counterexamples": counterexamples,
    }
    if args.output:
        formats.save_json(args.output, doc)
    _report(args, "found", started, args.output,
            detail={"instances": counts,
                    "num_counterexamples": len(counterexamples)})
    return FOUND


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="naeflow",
        description="Solvers and gadget generators for NAE / 1-in-degree "
                    "decompositions and zero-sum flows.")
    sub = parser.add_subparsers(dest="verb", required=True)

    def common(p):
        p.add_argument("--input", "-i", help="input file")
        p.add_argument("--output", "-o", help="output / witness file")
        p.add_argument("--k", type=int, default=3, help="flow range parameter")
        p.add_argument("--r", type=int, default=None, help="regularity parameter")
        p.add_argument("--seed", type=int, default=0, help="seed for randomized runs")
        p.add_argument("--time-limit", type=float, default=None,
                       help="wall-clock limit in seconds")
        p.add_argument("--format", choices=("json", "dot", "text"),
                       default="json", help="extra output format")

    p = sub.add_parser("solve", help="solve a decision problem on a graph")
    p.add_argument("problem", choices=(
        "nae", "one-in-degree", "one-in-degree-weighted", "zero-sum-flow",
        "vertex-flow", "nae-edge", "perfect-matching", "min-edge-deletion"))
    common(p)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("check", help="test a structural predicate")
    p.add_argument("predicate", choices=(
        "bipartite", "regular", "semiregular", "planar", "cycle-mod4"))
    common(p)
    p.add_argument("--cycle-cap", type=int, default=10 ** 6)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("gen", help="generate a reduction gadget")
    p.add_argument("reduction", choices=(
        "tree-like", "zero-sum", "regular-bipartite", "three-partition",
        "bipartition"))
    common(p)
    p.add_argument("--a", help="comma-separated items for three-partition")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("verify", help="verify a witness against an instance")
    p.add_argument("kind", choices=(
        "one-in-degree", "nae", "one-in-degree-weighted", "zero-sum-flow",
        "vertex-flow", "nae-edge", "perfect-matching"))
    common(p)
    p.add_argument("witness", help="witness file")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("sweep", help="enumerate a family and look for "
                                     "decomposition counterexamples")
    p.add_argument("family", choices=("cubic-bipartite-nae",))
    common(p)
    p.add_argument("--max-n", type=int, required=True)
    p.set_defaults(func=cmd_sweep)
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
