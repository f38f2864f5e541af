"""Plain-text graph and orientation files, DOT export, and JSON reports.

Graph files::

    graph <vertex_count> <edge_count>
    l <index> <label>        (optional, one per labelled vertex)
    e <u> <v>                (0-based indices)

Blank lines and lines starting with ``#`` are ignored. Orientation files
hold one ``a <tail> <head>`` line per directed edge. Directed families
(de Bruijn, overlapping permutations) are written with a ``digraph``
header and ``a`` lines; those files are output only.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any, Iterable

import jsonschema

from .families import Digraph
from .graph import Graph, Orientation


class ParseError(ValueError):
    def __init__(self, message: str, line: int | None = None, source: str = "<input>"):
        self.line = line
        self.source = source
        where = f"{source}:{line}: " if line is not None else f"{source}: "
        super().__init__(where + message)


def _lines(text: str) -> Iterable[tuple[int, list[str], str]]:
    for no, raw in enumerate(text.splitlines(), 1):
        s = raw.strip()
        if s and not s.startswith("#"):
            yield no, s.split(), s


def _int(tok: str, no: int, source: str, what: str) -> int:
    try:
        return int(tok)
    except ValueError:
        raise ParseError(f"{what} {tok!r} is not an integer", no, source) from None


def format_graph(G: Graph) -> str:
    out = [f"graph {G.vertex_count} {len(G.edges)}"]
    if G.labels is not None:
        out += [f"l {i} {lab}" for i, lab in enumerate(G.labels)]
    out += [f"e {u} {v}" for u, v in G.edge_list]
    return "\n".join(out) + "\n"


def format_digraph(D: Digraph) -> str:
    out = [f"digraph {D.vertex_count} {len(D.arcs)}"]
    if D.labels is not None:
        out += [f"l {i} {lab}" for i, lab in enumerate(D.labels)]
    out += [f"a {t} {h}" for t, h in sorted(D.arcs)]
    return "\n".join(out) + "\n"


def parse_graph(text: str, source: str = "<input>") -> Graph:
    header = None
    labels: dict[int, str] = {}
    edges: list[tuple[int, int]] = []
    seen: dict[tuple[int, int], int] = {}
    for no, tok, line in _lines(text):
        if header is None:
            if tok[0] != "graph" or len(tok) != 3:
                raise ParseError("expected header 'graph <vertex_count> <edge_count>'", no, source)
            header = (_int(tok[1], no, source, "vertex count"), _int(tok[2], no, source, "edge count"))
            if header[0] < 0 or header[1] < 0:
                raise ParseError("counts must be nonnegative", no, source)
            continue
        n = header[0]
        if tok[0] == "l":
            if len(tok) < 3:
                raise ParseError("label line needs 'l <index> <label>'", no, source)
            i = _int(tok[1], no, source, "vertex index")
            if not 0 <= i < n:
                raise ParseError(f"vertex index {i} out of range 0..{n - 1}", no, source)
            if i in labels:
                raise ParseError(f"vertex {i} labelled twice", no, source)
            labels[i] = line.split(None, 2)[2]
        elif tok[0] == "e":
            if len(tok) != 3:
                raise ParseError("edge line needs 'e <u> <v>'", no, source)
            u, v = (_int(t, no, source, "vertex index") for t in tok[1:])
            for x in (u, v):
                if not 0 <= x < n:
                    raise ParseError(f"vertex index {x} out of range 0..{n - 1}", no, source)
            if u == v:
                raise ParseError(f"self-loop at {u}", no, source)
            key = (min(u, v), max(u, v))
            if key in seen:
                raise ParseError(f"duplicate edge {u}-{v} (first on line {seen[key]})", no, source)
            seen[key] = no
            edges.append(key)
        else:
            raise ParseError(f"unknown line type {tok[0]!r}", no, source)
    if header is None:
        raise ParseError("empty file, expected a 'graph' header", None, source)
    if len(edges) != header[1]:
        raise ParseError(f"header announces {header[1]} edges, found {len(edges)}", None, source)
    lab = None
    if labels:
        if len(labels) != header[0]:
            raise ParseError(f"{len(labels)} of {header[0]} vertices labelled; label all or none", None, source)
        lab = tuple(labels[i] for i in range(header[0]))
        if len(set(lab)) != len(lab):
            raise ParseError("vertex labels must be distinct", None, source)
    return Graph.from_edges(header[0], edges, lab)


def format_orientation(D: Orientation) -> str:
    return "".join(f"a {t} {h}\n" for t, h in D.arc_list())


def parse_orientation(text: str, G: Graph, source: str = "<input>") -> Orientation:
    arcs: list[tuple[int, int]] = []
    seen: dict[tuple[int, int], int] = {}
    n = G.vertex_count
    for no, tok, _ in _lines(text):
        if tok[0] != "a" or len(tok) != 3:
            raise ParseError("expected 'a <tail> <head>'", no, source)
        t, h = (_int(x, no, source, "vertex index") for x in tok[1:])
        for x in (t, h):
            if not 0 <= x < n:
                raise ParseError(f"vertex index {x} out of range 0..{n - 1}", no, source)
        if not G.has_edge(t, h):
            raise ParseError(f"{t}->{h} is not an edge of the graph", no, source)
        key = (min(t, h), max(t, h))
        if key in seen:
            raise ParseError(f"edge {key[0]}-{key[1]} directed twice (first on line {seen[key]})", no, source)
        seen[key] = no
        arcs.append((t, h))
    return Orientation(G, frozenset(arcs))


def read_text(path: str | Path) -> str:
    return Path(path).read_text()


def read_graph(path: str | Path) -> Graph:
    return parse_graph(read_text(path), str(path))


def read_orientation(path: str | Path, G: Graph) -> Orientation:
    return parse_orientation(read_text(path), G, str(path))


def _dot_id(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def to_dot(G: Graph | Digraph, orientation: Orientation | None = None, name: str = "G") -> str:
    """Graphviz text; directed when G is a Digraph or an orientation is given."""
    label = (lambda v: G.labels[v]) if G.labels is not None else str
    directed = isinstance(G, Digraph) or orientation is not None
    out = [f"{'digraph' if directed else 'graph'} {_dot_id(name)} {{"]
    out += [f"  {v} [label={_dot_id(label(v))}];" for v in range(G.vertex_count)]
    if isinstance(G, Digraph):
        pairs, op = sorted(G.arcs), "->"
    elif orientation is not None:
        if orientation.base != G:
            raise ValueError("orientation belongs to a different graph")
        pairs, op = orientation.arc_list(), "->"
    else:
        pairs, op = list(G.edge_list), "--"
    out += [f"  {u} {op} {v};" for u, v in pairs]
    out.append("}")
    return "\n".join(out) + "\n"


REPORT_SCHEMA: dict[str, Any] = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "semirep report",
    "type": "object",
    "required": ["command", "parameters", "verdict", "witnesses", "counters", "elapsed_seconds"],
    "properties": {
        "command": {"type": "string"},
        "parameters": {"type": "object"},
        "verdict": {"type": "string"},
        "witnesses": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["kind"],
                "properties": {
                    "kind": {
                        "enum": [
                            "certificate",
                            "shortcut",
                            "directed_cycle",
                            "odd_cycle",
                            "bipartition",
                            "homomorphism_violation",
                            "word",
                            "non_alternating_pair",
                            "alternating_non_edge",
                            "criterion_failure",
                        ]
                    }
                },
            },
        },
        "counters": {"type": "object", "additionalProperties": {"type": ["number", "integer"]}},
        "elapsed_seconds": {"type": "number", "minimum": 0},
        "details": {"type": "object"},
    },
    "additionalProperties": False,
}


def make_report(
    command: str,
    parameters: dict,
    verdict: str,
    witnesses: list[dict] | None = None,
    counters: dict | None = None,
    elapsed: float = 0.0,
    details: dict | None = None,
) -> dict:
    doc = {
        "command": command,
        "parameters": parameters,
        "verdict": verdict,
        "witnesses": witnesses or [],
        "counters": counters or {},
        "elapsed_seconds": round(max(elapsed, 0.0), 6),
    }
    if details:
        doc["details"] = details
    validate_report(doc)
    return doc


def validate_report(doc: dict) -> None:
    jsonschema.validate(doc, REPORT_SCHEMA)


def dump_report(doc: dict, path: str | Path | None = None) -> str:
    text = json.dumps(doc, indent=2, sort_keys=False) + "\n"
    if path is not None:
        Path(path).write_text(text)
    return text
