"""Deciding word-representability by searching for a semi-transitive orientation.

The search fixes one vertex per connected component as a source (any
vertex may be chosen: a word-representable graph has a semi-transitive
orientation with an arbitrary prescribed source), branches on edge
directions and prunes with three forcing rules:

* acyclicity: an undecided edge between a vertex and one of its descendants
  must point down;
* cycle rule: on a cycle whose vertices are not a clique, once all but two
  edges run the same way round the cycle, the last two run the other way;
* shortcuts: an arc u->v is impossible when some x, z on u->v paths have x
  reaching z without being adjacent.

Every YES is re-verified with the independent checker in ``graph``.
"""

from __future__ import annotations

import enum
import itertools
import time
from dataclasses import dataclass, field

from .graph import Graph, Orientation, induced_subgraph, is_semi_transitive, iter_bits


class Verdict(str, enum.Enum):
    YES = "YES"
    NO = "NO"
    INCONCLUSIVE = "INCONCLUSIVE"


class OracleBudgetError(RuntimeError):
    pass


@dataclass
class DecisionReport:
    verdict: Verdict
    certificate: Orientation | None = None
    nodes_explored: int = 0
    elapsed: float = 0.0
    sources: tuple = ()
    reason: str = ""

    def to_dict(self, graph: Graph | None = None) -> dict:
        label = graph.label if graph is not None else str
        d = {
            "verdict": self.verdict.value,
            "nodes_explored": self.nodes_explored,
            "elapsed_seconds": round(self.elapsed, 6),
            "sources": [label(s) for s in self.sources],
        }
        if self.certificate is not None:
            d["certificate"] = [[label(t), label(h)] for t, h in self.certificate.arc_list()]
        if self.reason:
            d["reason"] = self.reason
        return d


@dataclass(frozen=True)
class Conflict:
    edge: tuple | None
    reason: str


class _BudgetExhausted(Exception):
    pass


@dataclass
class _Tables:
    """Read-only data shared by every state of one search."""

    graph: Graph
    edges: tuple
    index: dict
    incident: tuple  # incident[v]: edge indices at v
    nonadj: tuple  # nonadj[v]: bitset of vertices other than v not adjacent to v
    cycles: tuple  # (edge ids, cw direction per edge)
    cycles_of: tuple  # edge id -> cycle ids
    pruning: bool


def _cycles(G: Graph, index: dict, max_len: int) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    """Cycles usable by the cycle rule, as (edge ids, clockwise direction of each edge).

    Length-4 cycles are taken whenever their vertex set is not a clique;
    longer ones (up to ``max_len``) only when chordless.
    """
    adj = G.adj_bits
    found: list[tuple[int, ...]] = []
    n = G.vertex_count
    for a in range(n):
        higher = [b for b in G.neighbors[a] if b > a]
        for b, d in itertools.combinations(higher, 2):
            for c in iter_bits(adj[b] & adj[d]):
                if c <= a:
                    continue
                if (adj[a] >> c) & 1 and (adj[b] >> d) & 1:
                    continue  # K4
                found.append((a, b, c, d))
    if max_len > 4:
        for a in range(n):
            stack = [(a, b) for b in G.neighbors[a] if b > a]
            while stack:
                path = stack.pop()
                last = path[-1]
                for y in G.neighbors[last]:
                    if y <= a or y in path:
                        continue
                    inner = path[1:-1]
                    if any((adj[y] >> p) & 1 for p in inner):
                        continue  # chord to an inner vertex
                    closes = (adj[y] >> a) & 1
                    if closes and len(path) + 1 >= 5 and path[1] < y:
                        found.append(path + (y,))
                    if not closes and len(path) + 1 < max_len:
                        stack.append(path + (y,))
    out = []
    for cyc in found:
        ids, cw = [], []
        for i in range(len(cyc)):
            t, h = cyc[i], cyc[(i + 1) % len(cyc)]
            e = (t, h) if t < h else (h, t)
            ids.append(index[e])
            cw.append(1 if t < h else -1)
        out.append((tuple(ids), tuple(cw)))
    return out


def _tables(G: Graph, pruning: bool, max_cycle_length: int) -> _Tables:
    edges = G.edge_list
    index = G.edge_index
    incident: list[list[int]] = [[] for _ in range(G.vertex_count)]
    for i, (u, v) in enumerate(edges):
        incident[u].append(i)
        incident[v].append(i)
    full = (1 << G.vertex_count) - 1
    nonadj = tuple(full & ~G.adj_bits[v] & ~(1 << v) for v in range(G.vertex_count))
    cycles = _cycles(G, index, max_cycle_length) if pruning else []
    cycles_of: list[list[int]] = [[] for _ in edges]
    for c, (ids, _) in enumerate(cycles):
        for e in ids:
            cycles_of[e].append(c)
    return _Tables(
        G, edges, index, tuple(map(tuple, incident)), nonadj, tuple(cycles),
        tuple(map(tuple, cycles_of)), pruning,
    )


@dataclass
class SearchState:
    """A partial acyclic orientation plus its reachability closure."""

    tables: _Tables
    source: int
    direction: list = field(default_factory=list)  # per edge: 0 undecided, 1 low->high, -1 high->low
    reach: list = field(default_factory=list)
    anc: list = field(default_factory=list)
    open_adj: list = field(default_factory=list)  # neighbours over undecided edges
    decided_deg: list = field(default_factory=list)
    trail: list = field(default_factory=list)  # (edge, direction, "decision" | "propagation")
    pending: list = field(default_factory=list)

    @classmethod
    def initial(cls, tables: _Tables, source: int) -> SearchState:
        G = tables.graph
        n = G.vertex_count
        return cls(
            tables, source, [0] * len(tables.edges), [0] * n, [0] * n, list(G.adj_bits), [0] * n, [], [],
        )

    def copy(self) -> SearchState:
        return SearchState(
            self.tables, self.source, self.direction[:], self.reach[:], self.anc[:], self.open_adj[:],
            self.decided_deg[:], self.trail[:], self.pending[:],
        )

    def arc(self, i: int) -> tuple[int, int] | None:
        d = self.direction[i]
        u, v = self.tables.edges[i]
        return None if d == 0 else ((u, v) if d > 0 else (v, u))

    def is_total(self) -> bool:
        return all(self.direction)

    def assign(self, t: int, h: int, kind: str = "decision") -> Conflict | None:
        """Direct the edge {t, h} as t -> h, keeping the closure up to date."""
        i = self.tables.index[(t, h) if t < h else (h, t)]
        want = 1 if t < h else -1
        if self.direction[i] == want:
            return None
        if self.direction[i] == -want:
            return Conflict((t, h), "edge forced both ways")
        if (self.reach[h] >> t) & 1:
            return Conflict((t, h), "arc closes a directed cycle")
        self.direction[i] = want
        self.open_adj[t] &= ~(1 << h)
        self.open_adj[h] &= ~(1 << t)
        self.decided_deg[t] += 1
        self.decided_deg[h] += 1
        up = self.anc[t] | (1 << t)
        down = self.reach[h] | (1 << h)
        for x in iter_bits(up):
            self.reach[x] |= down
        for y in iter_bits(down):
            self.anc[y] |= up
        self.trail.append(((t, h), want, kind))
        self.pending.append(i)
        return None

    def to_orientation(self) -> Orientation:
        return Orientation(self.tables.graph, frozenset(self.arc(i) for i in range(len(self.direction))))

    def _certain_shortcut(self, u: int, v: int) -> bool:
        """Would an arc u -> v be the shortcutting edge of a shortcut already fixed by decided arcs?"""
        J = (self.reach[u] | (1 << u)) & (self.anc[v] | (1 << v))
        if not J & ~((1 << u) | (1 << v)):
            return False
        nonadj = self.tables.nonadj
        reach = self.reach
        for x in iter_bits(J):
            if reach[x] & nonadj[x] & J:
                return True
        return False


def propagate(state: SearchState) -> SearchState | Conflict:
    """Apply the forcing rules to a fixpoint; the state is updated in place."""
    tables = state.tables
    while True:
        while state.pending:
            i = state.pending.pop()
            t, h = state.arc(i)
            # acyclicity: every undecided edge from an ancestor of t to a descendant of h points down
            up = state.anc[t] | (1 << t)
            down = state.reach[h] | (1 << h)
            for x in iter_bits(up):
                for y in iter_bits(state.open_adj[x] & down):
                    c = state.assign(x, y, "propagation")
                    if c:
                        return c
            for c_id in tables.cycles_of[i]:
                c = _cycle_rule(state, c_id)
                if c:
                    return c
        if not tables.pruning and not state.is_total():
            return state
        forced = False
        for i, (u, v) in enumerate(tables.edges):
            d = state.direction[i]
            if d:
                t, h = (u, v) if d > 0 else (v, u)
                if state._certain_shortcut(t, h):
                    return Conflict((t, h), "arc is the shortcutting edge of a shortcut")
            elif tables.pruning:
                fwd = state._certain_shortcut(u, v)
                bwd = state._certain_shortcut(v, u)
                if fwd and bwd:
                    return Conflict((u, v), "both directions complete a shortcut")
                if fwd or bwd:
                    c = state.assign(v, u, "propagation") if fwd else state.assign(u, v, "propagation")
                    if c:
                        return c
                    forced = True
        if not forced and not state.pending:
            return state


def _cycle_rule(state: SearchState, c_id: int) -> Conflict | None:
    ids, cw = state.tables.cycles[c_id]
    length = len(ids)
    same = opposite = 0
    open_ids = []
    for e, w in zip(ids, cw):
        d = state.direction[e]
        if d == 0:
            open_ids.append((e, w))
        elif d == w:
            same += 1
        else:
            opposite += 1
    if same >= length - 1 or opposite >= length - 1:
        return Conflict(None, "cycle with all but one edge oriented the same way")
    if open_ids and (same == length - 2 or opposite == length - 2):
        flip = -1 if same == length - 2 else 1
        for e, w in open_ids:
            u, v = state.tables.edges[e]
            d = w * flip
            c = state.assign(u, v, "propagation") if d > 0 else state.assign(v, u, "propagation")
            if c:
                return c
    return None


def _choose_edge(state: SearchState) -> int | None:
    best, best_score = None, -1
    deg = state.decided_deg
    for i, (u, v) in enumerate(state.tables.edges):
        if state.direction[i] == 0:
            score = deg[u] + deg[v]
            if score > best_score:
                best, best_score = i, score
    return best


class _Search:
    def __init__(self, node_budget: int | None, deadline: float | None):
        self.nodes = 0
        self.node_budget = node_budget
        self.deadline = deadline

    def run(self, state: SearchState) -> SearchState | None:
        self.nodes += 1
        if self.node_budget is not None and self.nodes > self.node_budget:
            raise _BudgetExhausted(f"node budget of {self.node_budget} exhausted")
        if self.deadline is not None and self.nodes % 64 == 0 and time.monotonic() > self.deadline:
            raise _BudgetExhausted("time budget exhausted")
        res = propagate(state)
        if isinstance(res, Conflict):
            return None
        i = _choose_edge(state)
        if i is None:
            return state
        u, v = state.tables.edges[i]
        for t, h in ((u, v), (v, u)):
            child = state.copy()
            if child.assign(t, h) is None:
                found = self.run(child)
                if found is not None:
                    return found
        return None


def default_source(G: Graph, vertices=None) -> int:
    vertices = range(G.vertex_count) if vertices is None else vertices
    return max(vertices, key=lambda v: (G.degree(v), -v))


def decide(
    G: Graph,
    source: int | None = None,
    node_budget: int | None = None,
    time_budget: float | None = None,
    pruning: bool = True,
    max_cycle_length: int = 4,
) -> DecisionReport:
    """Decide whether G has a semi-transitive orientation (equivalently, is word-representable).

    Components are searched independently. ``source`` fixes the source of
    its own component; other components use a vertex of maximum degree.
    Exhausting a budget yields INCONCLUSIVE, never NO.
    """
    start = time.monotonic()
    deadline = start + time_budget if time_budget is not None else None
    search = _Search(node_budget, deadline)
    arcs: set = set()
    sources = []
    for comp in G.components():
        if len(comp) == 1:
            continue
        H = induced_subgraph(G, comp)
        if source is not None and source in comp:
            s_local = comp.index(source)
        else:
            s_local = default_source(H)
        sources.append(comp[s_local])
        tables = _tables(H, pruning, max_cycle_length)
        state = SearchState.initial(tables, s_local)
        conflict = None
        for w in H.neighbors[s_local]:
            conflict = state.assign(s_local, w) or conflict
        try:
            found = None if conflict else search.run(state)
        except _BudgetExhausted as exc:
            return DecisionReport(
                Verdict.INCONCLUSIVE, None, search.nodes, time.monotonic() - start, tuple(sources), str(exc)
            )
        if found is None:
            return DecisionReport(
                Verdict.NO, None, search.nodes, time.monotonic() - start, tuple(sources),
                f"no semi-transitive orientation of the component containing {G.label(comp[0])}",
            )
        arcs.update((comp[t], comp[h]) for t, h in found.to_orientation().arcs)
    cert = Orientation(G, frozenset(arcs))
    if not verify_certificate(G, cert):
        raise AssertionError("search produced an orientation that fails independent verification")
    return DecisionReport(Verdict.YES, cert, search.nodes, time.monotonic() - start, tuple(sources))


def verify_certificate(G: Graph, D: Orientation) -> bool:
    if D.base.vertex_count != G.vertex_count or D.base.edges != G.edges:
        raise ValueError("orientation is not over the given graph")
    if not D.is_total:
        return False
    return is_semi_transitive(D)


def _acyclic_bits(n: int, out: list[int]) -> bool:
    remaining = (1 << n) - 1
    while remaining:
        sinks = 0
        for v in iter_bits(remaining):
            if not out[v] & remaining:
                sinks |= 1 << v
        if not sinks:
            return False
        remaining &= ~sinks
    return True


def naive_decide(G: Graph, max_edges: int = 24) -> DecisionReport:
    """Reference oracle: try all 2^|E| orientations."""
    edges = G.edge_list
    if len(edges) > max_edges:
        raise OracleBudgetError(f"{len(edges)} edges exceed the oracle limit of {max_edges}")
    start = time.monotonic()
    n = G.vertex_count
    out = [0] * n
    tried = 0

    def rec(i: int) -> Orientation | None:
        nonlocal tried
        if i == len(edges):
            tried += 1
            if not _acyclic_bits(n, out):
                return None
            arcs = frozenset(
                (u, v) if (out[u] >> v) & 1 else (v, u) for u, v in edges
            )
            D = Orientation(G, arcs)
            return D if is_semi_transitive(D) else None
        u, v = edges[i]
        for t, h in ((u, v), (v, u)):
            out[t] |= 1 << h
            found = rec(i + 1)
            out[t] &= ~(1 << h)
            if found is not None:
                return found
        return None

    found = rec(0)
    verdict = Verdict.YES if found is not None else Verdict.NO
    return DecisionReport(verdict, found, tried, time.monotonic() - start)
