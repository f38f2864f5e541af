"""Command-line driver.

Exit status: 0 when every check passes, 1 when a mathematical check fails,
2 on usage or parse errors, 3 when a search budget runs out.
"""

from __future__ import annotations

import argparse
import os
import sys
import time
from pathlib import Path

from . import __version__
from .acceptance import DEFAULT_SEED, FAIL, INCONCLUSIVE, PROFILES, run_all
from .embedding.pipeline import NOT_COVERED, SEMI_TRANSITIVE, pipeline
from .engine import OracleBudgetError, Verdict, decide, naive_decide
from .families import FAMILIES, Digraph, FamilySpec, VertexBudgetError, build, parse_word
from .graph import Graph, bipartition, find_directed_cycle, find_shortcut
from .io import ParseError, dump_report, format_digraph, format_graph, make_report, read_graph, read_orientation, to_dot
from .words import SearchBudgetExceeded, find_uniform_word, graph_of_word

EXIT_OK, EXIT_CHECK_FAILED, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3
BUDGET_ENV = "SEMIREP_BUDGET"
DEFAULT_NODE_BUDGET = 5_000_000


class UsageError(Exception):
    pass


def parse_budget(text: str | None) -> tuple[int | None, float | None]:
    """'NODES', 'NODES:SECONDS', ':SECONDS' or 'none' -> (node budget, time budget)."""
    if text is None or text.strip().lower() in ("", "none"):
        return None, None
    nodes, _, secs = text.strip().partition(":")
    try:
        return (int(nodes) if nodes else None, float(secs) if secs else None)
    except ValueError:
        raise UsageError(f"cannot parse budget {text!r}; use NODES, NODES:SECONDS or :SECONDS") from None


def resolve_budget(flag: str | None) -> tuple[int | None, float | None]:
    # command-line flag, then environment, then the default node budget
    if flag is not None:
        return parse_budget(flag)
    env = os.environ.get(BUDGET_ENV)
    if env is not None:
        return parse_budget(env)
    return DEFAULT_NODE_BUDGET, None


def _spec(args) -> FamilySpec:
    words = tuple(parse_word(w) for w in args.words.split(",")) if getattr(args, "words", None) else ()
    try:
        return FamilySpec(args.family, args.n, args.k, args.m, words)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _vertex(G: Graph, token: str) -> int:
    try:
        v = G.index_of(token) if G.labels is not None else int(token)
    except (KeyError, ValueError):
        raise UsageError(f"unknown vertex {token!r}") from None
    if not 0 <= v < G.vertex_count:
        raise UsageError(f"vertex {token!r} out of range")
    return v


def _emit(args, doc: dict) -> None:
    text = dump_report(doc)
    if getattr(args, "out", None):
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)


def cmd_gen(args) -> int:
    spec = _spec(args)
    G = build(spec, args.max_vertices)
    if args.format == "dot":
        D = read_orientation(args.orientation, G) if args.orientation else None
        text = to_dot(G, D)
    elif isinstance(G, Digraph):
        text = format_digraph(G)
    else:
        text = format_graph(G)
    if args.out:
        try:
            Path(args.out).write_text(text)
        except OSError as exc:
            raise UsageError(f"cannot write {args.out}: {exc}") from None
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_decide(args) -> int:
    t0 = time.perf_counter()
    G = read_graph(args.graph)
    nodes, secs = resolve_budget(args.budget)
    source = _vertex(G, args.source) if args.source is not None else None
    rep = decide(G, source=source, node_budget=nodes, time_budget=secs, pruning=not args.no_pruning, max_cycle_length=args.max_cycle_length)
    body = rep.to_dict(G)
    witnesses = []
    if "certificate" in body:
        witnesses.append({"kind": "certificate", "arcs": body.pop("certificate")})
    details = {k: v for k, v in body.items() if k not in ("verdict", "nodes_explored", "elapsed_seconds")}
    status = EXIT_BUDGET if rep.verdict is Verdict.INCONCLUSIVE else EXIT_OK
    if args.oracle:
        try:
            ref = naive_decide(G, args.oracle_max_edges)
            details["oracle_verdict"] = ref.verdict.value
            if rep.verdict is not Verdict.INCONCLUSIVE and ref.verdict is not rep.verdict:
                status = EXIT_CHECK_FAILED
        except OracleBudgetError as exc:
            details["oracle_verdict"] = f"skipped: {exc}"
    doc = make_report(
        "decide",
        {"graph": str(args.graph), "source": args.source, "node_budget": nodes, "time_budget": secs, "pruning": not args.no_pruning},
        rep.verdict.value,
        witnesses,
        {"vertices": G.vertex_count, "edges": len(G.edges), "nodes_explored": rep.nodes_explored},
        time.perf_counter() - t0,
        details,
    )
    _emit(args, doc)
    return status


def cmd_check_orientation(args) -> int:
    t0 = time.perf_counter()
    G = read_graph(args.graph)
    D = read_orientation(args.orientation, G)
    witnesses = []
    if not D.is_total:
        verdict = "partial"
        missing = sorted(G.edges - {(min(t, h), max(t, h)) for t, h in D.arcs})
        details = {"undirected_edges": [[G.label(u), G.label(v)] for u, v in missing[:20]]}
    else:
        details = {}
        cycle = find_directed_cycle(D)
        if cycle is not None:
            verdict = "cyclic"
            witnesses.append({"kind": "directed_cycle", "cycle": [G.label(v) for v in cycle]})
        else:
            w = find_shortcut(D)
            verdict = "semi-transitive" if w is None else "shortcut"
            if w is not None:
                witnesses.append({"kind": "shortcut", **w.labelled(G)})
    doc = make_report(
        "check-orientation",
        {"graph": str(args.graph), "orientation": str(args.orientation)},
        verdict,
        witnesses,
        {"vertices": G.vertex_count, "edges": len(G.edges), "arcs": len(D.arcs)},
        time.perf_counter() - t0,
        details,
    )
    _emit(args, doc)
    return EXIT_OK if verdict == "semi-transitive" else EXIT_CHECK_FAILED


def cmd_embed(args) -> int:
    t0 = time.perf_counter()
    spec = _spec(args)
    rep = pipeline(spec, full_scan=not args.no_full_scan)
    body = rep.to_dict()
    witnesses = []
    if "witness" in body:
        witnesses.append({"kind": "shortcut", **body.pop("witness")})
    doc = make_report(
        "embed",
        spec.describe(),
        rep.verdict,
        witnesses,
        {"vertices": rep.vertex_count, "edges": rep.edge_count},
        time.perf_counter() - t0,
        {k: v for k, v in body.items() if k not in ("verdict", "spec", "vertex_count", "edge_count")},
    )
    _emit(args, doc)
    if rep.verdict == SEMI_TRANSITIVE:
        return EXIT_OK
    return EXIT_USAGE if rep.verdict == NOT_COVERED else EXIT_CHECK_FAILED


def cmd_bipartite(args) -> int:
    t0 = time.perf_counter()
    spec = _spec(args)
    if spec.family not in ("increasing", "decreasing"):
        raise UsageError("bipartite works on the increasing or decreasing family")
    G = build(spec, args.max_vertices)
    res = bipartition(G)
    if res.is_bipartite:
        verdict = "bipartite"
        witnesses = [{"kind": "bipartition", "parts": [[G.label(v) for v in sorted(p)] for p in res.parts]}]
    else:
        verdict = "odd cycle"
        witnesses = [{"kind": "odd_cycle", "cycle": [G.label(v) for v in res.odd_cycle]}]
    doc = make_report("bipartite", spec.describe(), verdict, witnesses, {"vertices": G.vertex_count, "edges": len(G.edges)}, time.perf_counter() - t0)
    _emit(args, doc)
    return EXIT_OK


def cmd_word_check(args) -> int:
    t0 = time.perf_counter()
    G = read_graph(args.graph)
    params: dict = {"graph": str(args.graph)}
    witnesses = []
    if args.word is not None:
        letters = [_vertex(G, tok) for tok in args.word.replace(",", " ").split()]
        params["word"] = args.word
        if set(letters) != set(range(G.vertex_count)):
            raise UsageError("the word must use every vertex of the graph and nothing else")
        H = graph_of_word(letters, range(G.vertex_count))
        ok = H.edges == G.edges
        verdict = "represents" if ok else "does not represent"
        for u, v in sorted(H.edges ^ G.edges)[:20]:
            witnesses.append({"kind": "non_alternating_pair" if G.has_edge(u, v) else "alternating_non_edge", "pair": [G.label(u), G.label(v)]})
        status = EXIT_OK if ok else EXIT_CHECK_FAILED
    else:
        params["k_max"] = args.k_max
        nodes, _ = resolve_budget(args.budget)
        try:
            w = find_uniform_word(G, args.k_max, nodes or 10**12)
        except SearchBudgetExceeded as exc:
            doc = make_report("word-check", params, "INCONCLUSIVE", [], {"vertices": G.vertex_count}, time.perf_counter() - t0, {"reason": str(exc)})
            _emit(args, doc)
            return EXIT_BUDGET
        if w is None:
            verdict, status = "not found", EXIT_BUDGET
        else:
            verdict, status = "represents", EXIT_OK
            witnesses.append({"kind": "word", "word": [G.label(v) for v in w]})
    doc = make_report("word-check", params, verdict, witnesses, {"vertices": G.vertex_count, "edges": len(G.edges)}, time.perf_counter() - t0)
    _emit(args, doc)
    return status


def cmd_verify_paper(args) -> int:
    t0 = time.perf_counter()
    echo = (lambda line: print(line, file=sys.stderr, flush=True)) if not args.quiet else None
    results = run_all(args.profile, args.seed, args.criteria, echo)
    failed = [r for r in results if r.status == FAIL]
    witnesses = [{"kind": "criterion_failure", "criterion": r.number, "checks": r.checks} for r in failed]
    verdict = "FAIL" if failed else "PASS"
    doc = make_report(
        "verify-paper",
        {"profile": args.profile, "seed": args.seed, "criteria": args.criteria},
        verdict,
        witnesses,
        {
            "criteria": len(results),
            "failed": len(failed),
            "inconclusive": sum(r.status == INCONCLUSIVE for r in results),
        },
        time.perf_counter() - t0,
        {"results": [r.to_dict() for r in results]},
    )
    _emit(args, doc)
    return EXIT_CHECK_FAILED if failed else EXIT_OK


def _family_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--family", required=True, choices=FAMILIES)
    p.add_argument("-n", type=int, required=True, help="word length (or size for wheel/complete)")
    p.add_argument("-k", type=int, default=2, help="alphabet size (default 2)")
    p.add_argument("-m", type=int, default=0, help="minimum gap between adjacent letters (default 0)")
    p.add_argument("--words", help="comma-separated member words for the cluster family")
    p.add_argument("--max-vertices", type=int, default=None, help="refuse to build larger graphs")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", help="write the output here instead of stdout")
    common.add_argument("--seed", type=int, default=DEFAULT_SEED, help="seed for randomized checks")
    common.add_argument("--threads", type=int, default=1, help="accepted for compatibility; work runs sequentially")

    parser = argparse.ArgumentParser(prog="semirep", description="Word-representability of de Bruijn-type graphs.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", parents=[common], help="write a family graph")
    _family_args(p)
    p.add_argument("--format", choices=("edgelist", "dot"), default="edgelist")
    p.add_argument("--orientation", help="orientation file to draw directed edges (dot only)")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("decide", parents=[common], help="decide word-representability of a graph file")
    p.add_argument("graph")
    p.add_argument("--source", help="vertex (label or index) fixed as a source")
    p.add_argument("--budget", help=f"NODES, NODES:SECONDS or :SECONDS (default from ${BUDGET_ENV})")
    p.add_argument("--oracle", action="store_true", help="also run the exhaustive orientation search")
    p.add_argument("--oracle-max-edges", type=int, default=24)
    p.add_argument("--no-pruning", action="store_true", help="disable propagation (for comparison)")
    p.add_argument("--max-cycle-length", type=int, default=4)
    p.set_defaults(func=cmd_decide)

    p = sub.add_parser("check-orientation", parents=[common], help="test an orientation for semi-transitivity")
    p.add_argument("graph")
    p.add_argument("orientation")
    p.set_defaults(func=cmd_check_orientation)

    p = sub.add_parser("embed", parents=[common], help="run the homomorphism/lift verification for a family")
    _family_args(p)
    p.add_argument("--no-full-scan", action="store_true", help="skip the independent whole-graph shortcut scan")
    p.set_defaults(func=cmd_embed)

    p = sub.add_parser("bipartite", parents=[common], help="bipartition or odd cycle of S^< / S^>")
    _family_args(p)
    p.set_defaults(func=cmd_bipartite)

    p = sub.add_parser("word-check", parents=[common], help="check or search a representing word")
    p.add_argument("graph")
    p.add_argument("--word", help="letters separated by spaces or commas (labels or indices)")
    p.add_argument("--k-max", type=int, default=3, help="largest uniformity tried when searching")
    p.add_argument("--budget", help="node budget for the search")
    p.set_defaults(func=cmd_word_check)

    p = sub.add_parser("verify-paper", parents=[common], help="run the acceptance suite")
    p.add_argument("--profile", choices=PROFILES, default="quick")
    p.add_argument("--criteria", type=int, nargs="*", help="run only these criterion numbers")
    p.add_argument("--quiet", action="store_true", help="no progress lines on stderr")
    p.set_defaults(func=cmd_verify_paper)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.threads < 1:
        parser.error("--threads must be >= 1")
    try:
        return args.func(args)
    except (UsageError, ParseError, FileNotFoundError, VertexBudgetError) as exc:
        print(f"semirep {args.command}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"semirep {args.command}: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
