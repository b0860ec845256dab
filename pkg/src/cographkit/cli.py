"""Command-line front end.

Every invocation prints exactly one JSON report on stdout (command echo,
verdict, payload, statistics) and a short human summary on stderr.
Exit codes: 0 positive verdict / success, 1 negative verdict (not a
cograph, infeasible, failed certificate extraction), 2 usage or input
error, 3 node budget exhausted.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from typing import NoReturn

from . import decomp, gadgets, symbolic
from .cotree import cotree_to_graph, parse_newick, recognize, to_newick
from .graph import Graph, P4Witness, enumerate_induced_p4, format_edge_list, hypercube, parse_edge_list

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_USAGE = 2
EXIT_TIMEOUT = 3


class InputError(Exception):
    """File or format problem; reported on stderr with exit status 2."""


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, "r", encoding="utf-8") as handle:
            return handle.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from exc


def _unwrap_payload(doc):
    if isinstance(doc, dict) and "payload" in doc:
        return doc["payload"]
    return doc


def graph_to_json(g: Graph) -> dict:
    return {"n": g.n, "m": len(g.edges), "edges": [[u, v] for u, v in g.edges]}


def graph_from_json(obj) -> Graph:
    if not isinstance(obj, dict) or "n" not in obj or "edges" not in obj:
        raise InputError("graph JSON needs \"n\" and \"edges\"")
    try:
        return Graph(int(obj["n"]), [(int(u), int(v)) for u, v in obj["edges"]])
    except (TypeError, ValueError) as exc:
        raise InputError(f"bad graph JSON: {exc}") from exc


def _read_graph(path: str) -> Graph:
    text = _read_text(path)
    stripped = text.lstrip()
    if stripped.startswith("{"):
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as exc:
            raise InputError(f"{path}: invalid JSON: {exc}") from exc
        return graph_from_json(_unwrap_payload(doc))
    try:
        return parse_edge_list(text)
    except ValueError as exc:
        raise InputError(f"{path}: {exc}") from exc


def _read_json(path: str) -> dict:
    text = _read_text(path)
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: invalid JSON: {exc}") from exc
    return _unwrap_payload(doc)


def _witness_payload(witness: P4Witness) -> dict:
    return {"p4": list(witness)}


def _violation_payload(v: symbolic.AxiomViolation) -> dict:
    return {
        "axiom": v.axiom,
        "vertices": list(v.vertices),
        "symbol": v.symbol,
        "p4": list(v.p4) if v.p4 is not None else None,
    }


# ---------------------------------------------------------------------------
# subcommand handlers: each returns (exit_code, verdict, payload, stats, summary)
# ---------------------------------------------------------------------------


def _cmd_recognize(args):
    g = _read_graph(args.graph)
    try:
        result = recognize(g)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    if isinstance(result, P4Witness):
        return (
            EXIT_NEGATIVE,
            "not-cograph",
            _witness_payload(result),
            {},
            f"not a cograph: induced path on {tuple(result)}",
        )
    newick = to_newick(result)
    return EXIT_OK, "cograph", {"newick": newick, "leaves": result.num_leaves}, {}, f"cograph: {newick}"


def _cmd_cotree(args):
    try:
        tree = parse_newick(_read_text(args.tree))
        g = cotree_to_graph(tree)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    payload = graph_to_json(g)
    payload["edge_list"] = format_edge_list(g)
    return EXIT_OK, "ok", payload, {}, f"reconstructed {g.n} vertices, {len(g.edges)} edges"


def _cmd_p4s(args):
    g = _read_graph(args.graph)
    witnesses = enumerate_induced_p4(g)
    payload = {"count": len(witnesses), "witnesses": [list(w) for w in witnesses]}
    return EXIT_OK, "ok", payload, {}, f"{len(witnesses)} induced paths"


def _cmd_hypercube(args):
    if args.dimension < 0:
        raise InputError("dimension must be non-negative")
    if args.layers:
        if args.dimension % 2 or args.dimension == 0:
            raise InputError("--layers needs a positive even dimension")
        d = decomp.layers_partition(args.dimension // 2)
        payload = decomp.decomposition_to_json(d)
        return EXIT_OK, "ok", payload, {}, f"layer partition of the {args.dimension}-cube, k={d.k}"
    g = hypercube(args.dimension)
    return EXIT_OK, "ok", graph_to_json(g), {}, f"{args.dimension}-cube: {g.n} vertices, {len(g.edges)} edges"


def _read_map(path: str) -> symbolic.SymbolicMap:
    try:
        return symbolic.parse_symbolic_map(_read_text(path))
    except ValueError as exc:
        raise InputError(f"{path}: {exc}") from exc


def _cmd_ultrametric_check(args):
    d = _read_map(args.map)
    violation = symbolic.check_axioms(d)
    if violation is None:
        return EXIT_OK, "ultrametric", {"n": d.n, "symbols": d.num_symbols}, {}, "map is tree-representable"
    return (
        EXIT_NEGATIVE,
        "not-ultrametric",
        _violation_payload(violation),
        {},
        f"violates {violation.axiom} at {violation.vertices or violation.symbol}",
    )


def _cmd_ultrametric_represent(args):
    d = _read_map(args.map)
    try:
        tree = symbolic.build_representation(d)
    except symbolic.NotUltrametricError as exc:
        return (
            EXIT_NEGATIVE,
            "not-ultrametric",
            _violation_payload(exc.violation),
            {},
            f"violates {exc.violation.axiom}",
        )
    newick = to_newick(tree)
    return EXIT_OK, "ultrametric", {"newick": newick, "symbols": d.num_symbols}, {}, f"representation: {newick}"


def _cmd_decompose(args):
    g = _read_graph(args.graph)
    if args.strategy in ("vizing", "greedy"):
        d = decomp.vizing_partition(g) if args.strategy == "vizing" else decomp.greedy_partition(g)
        payload = decomp.decomposition_to_json(d)
        stats = {"strategy": args.strategy, "k": d.k, "nodes": 0}
        return EXIT_OK, "decomposed", payload, stats, f"{args.strategy}: k={d.k}"
    k_max = args.k_max if args.k_max is not None else max(1, g.max_degree() + 1)
    solve = decomp.exact_min_partition if args.mode == decomp.PARTITION else decomp.exact_min_cover
    result = solve(g, k_max, node_budget=args.budget_nodes)
    stats = {"strategy": "exact", "nodes": result.nodes, "k_max": k_max}
    if result.status == decomp.SOLVED:
        payload = decomp.decomposition_to_json(result.decomposition)
        stats["k"] = result.decomposition.k
        return EXIT_OK, "decomposed", payload, stats, f"exact minimum k={result.decomposition.k}"
    if result.status == decomp.INFEASIBLE:
        payload = {"k_max": k_max, "infeasible_below": result.infeasible_below}
        return EXIT_NEGATIVE, "infeasible", payload, stats, f"no {args.mode} with k <= {k_max}"
    payload = {"k_max": k_max, "infeasible_below": result.infeasible_below}
    return (
        EXIT_TIMEOUT,
        "timeout",
        payload,
        stats,
        f"budget exhausted; no {args.mode} with k <= {result.infeasible_below}",
    )


def _cmd_coarsen(args):
    obj = _read_json(args.decomposition)
    host = _read_graph(args.graph) if args.graph else None
    try:
        d = decomp.decomposition_from_json(obj, host=host)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    fault = decomp.validate(d)
    if fault is not None:
        payload = {"kind": fault.kind, "detail": fault.detail or str(fault)}
        return EXIT_NEGATIVE, "invalid", payload, {}, f"input decomposition invalid: {fault.kind}"
    coarse = decomp.coarsen(d)
    payload = decomp.decomposition_to_json(coarse)
    return EXIT_OK, "coarsened", payload, {"k": coarse.k}, f"coarsened to k={coarse.k}"


def _gadget_payload(gg: gadgets.GadgetGraph) -> dict:
    payload = graph_to_json(gg.graph)
    payload["roles"] = dict(sorted(gg.roles.items()))
    return payload


def _cmd_gadget(args):
    if args.kind == "literal":
        gg = gadgets.literal_graph()
    elif args.kind == "extended":
        gg = gadgets.extended_literal_graph()
    elif args.kind == "clause":
        gg = gadgets.clause_gadget()
    else:
        if not args.formula:
            raise InputError("gadget formula needs a formula file")
        try:
            f = gadgets.parse_formula(_read_text(args.formula))
            gg = gadgets.build_formula_graph(f)
        except ValueError as exc:
            raise InputError(str(exc)) from exc
    g = gg.graph
    return EXIT_OK, "ok", _gadget_payload(gg), {}, f"{args.kind} gadget: {g.n} vertices, {len(g.edges)} edges"


def _cmd_reduce_to_graph(args):
    try:
        f = gadgets.parse_formula(_read_text(args.formula))
        gg = gadgets.build_formula_graph(f)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    return EXIT_OK, "ok", _gadget_payload(gg), {}, f"formula graph: {gg.graph.n} vertices"


def _cmd_reduce_from_partition(args):
    try:
        f = gadgets.parse_formula(_read_text(args.formula))
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    obj = _read_json(args.decomposition)
    try:
        d = decomp.decomposition_from_json(obj)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    try:
        values = gadgets.assignment_from_partition(f, d)
    except ValueError as exc:
        return EXIT_NEGATIVE, "extraction-failed", {"reason": str(exc)}, {}, f"extraction failed: {exc}"
    payload = {"values": [bool(v) for v in values]}
    return EXIT_OK, "satisfiable", payload, {}, f"assignment {''.join('T' if v else 'F' for v in values)}"


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cographkit",
        description="Cograph recognition, tree representations, edge decompositions, "
        "and satisfiability reduction gadgets.  '-' reads standard input.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("recognize", help="decide cograph-ness; emit a cotree or an induced-path witness")
    p.add_argument("graph", help="edge-list or graph-JSON file, or -")
    p.set_defaults(handler=_cmd_recognize)

    p = sub.add_parser("cotree", help="rebuild the graph encoded by a cotree file")
    p.add_argument("tree", help="newick cotree file, or -")
    p.set_defaults(handler=_cmd_cotree)

    p = sub.add_parser("p4s", help="list all induced paths on four vertices")
    p.add_argument("graph")
    p.set_defaults(handler=_cmd_p4s)

    p = sub.add_parser("hypercube", help="emit the d-cube, optionally its square-layer partition")
    p.add_argument("dimension", type=int)
    p.add_argument("--layers", action="store_true", help="emit the layer partition (even d only)")
    p.set_defaults(handler=_cmd_hypercube)

    p = sub.add_parser("ultrametric", help="check or represent a symbol map")
    usub = p.add_subparsers(dest="subcommand", required=True)
    pc = usub.add_parser("check", help="test the tree-representability axioms")
    pc.add_argument("map", help="symbol map file, or -")
    pc.set_defaults(handler=_cmd_ultrametric_check)
    pr = usub.add_parser("represent", help="build a realizing labeled tree")
    pr.add_argument("map")
    pr.set_defaults(handler=_cmd_ultrametric_represent)

    p = sub.add_parser("decompose", help="split the edge set into cograph classes")
    p.add_argument("graph")
    p.add_argument("--mode", choices=[decomp.PARTITION, decomp.COVER], default=decomp.PARTITION)
    p.add_argument(
        "--strategy",
        choices=["vizing", "greedy", "exact"],
        default="exact",
        help="vizing: proper-coloring bound; greedy: coloring plus coarsening; exact: minimum search",
    )
    p.add_argument("--k-max", type=int, default=None, help="largest k to try (default: max degree + 1)")
    p.add_argument("--budget-nodes", type=int, default=10_000_000, help="search node budget")
    p.add_argument("--jobs", type=int, default=1, help="reserved; the solver is single-threaded")
    p.set_defaults(handler=_cmd_decompose)

    p = sub.add_parser("coarsen", help="merge decomposition classes while unions stay cographs")
    p.add_argument("decomposition", help="decomposition JSON file, or -")
    p.add_argument("--graph", default=None, help="optional host graph file for coverage checking")
    p.set_defaults(handler=_cmd_coarsen)

    p = sub.add_parser("gadget", help="emit a reduction gadget graph with its role map")
    gsub = p.add_subparsers(dest="kind", required=True)
    for kind in ("literal", "extended", "clause"):
        pg = gsub.add_parser(kind)
        pg.set_defaults(handler=_cmd_gadget, kind=kind)
    pg = gsub.add_parser("formula")
    pg.add_argument("formula", help="formula file, or -")
    pg.set_defaults(handler=_cmd_gadget, kind="formula")

    p = sub.add_parser("reduce", help="translate between formulas and decomposition certificates")
    rsub = p.add_subparsers(dest="subcommand", required=True)
    rt = rsub.add_parser("to-graph", help="formula to gadget graph")
    rt.add_argument("formula")
    rt.set_defaults(handler=_cmd_reduce_to_graph)
    rf = rsub.add_parser("from-partition", help="two-class decomposition back to an assignment")
    rf.add_argument("decomposition", help="decomposition JSON file, or -")
    rf.add_argument("--formula", required=True, help="formula file the gadget graph was built from")
    rf.set_defaults(handler=_cmd_reduce_from_partition)

    return parser


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:]) if argv is None else list(argv)
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else 0
    if getattr(args, "jobs", 1) is not None and getattr(args, "jobs", 1) < 1:
        print("error: --jobs must be at least 1", file=sys.stderr)
        return EXIT_USAGE
    started = time.perf_counter()
    try:
        code, verdict, payload, stats, summary = args.handler(args)
    except (InputError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    report = {
        "command": args.command,
        "argv": argv,
        "verdict": verdict,
        "payload": payload,
        "stats": {"elapsed_s": round(time.perf_counter() - started, 6), **stats},
    }
    json.dump(report, sys.stdout, indent=2)
    sys.stdout.write("\n")
    print(summary, file=sys.stderr)
    return code


if __name__ == "__main__":
    raise SystemExit(main())
