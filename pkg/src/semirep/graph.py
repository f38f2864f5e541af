"""Simple graphs, orientations, and the shortcut machinery.

Vertices are dense 0-based indices; labels are carried as metadata only.
Adjacency is also exposed as Python-int bitsets, which is what the search
code and the large shortcut scans work with.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Sequence

import numpy as np


class ContractError(ValueError):
    """An operation was called outside its precondition."""


class CycleError(ValueError):
    """The orientation contains a directed cycle."""

    def __init__(self, cycle: Sequence[int]):
        self.cycle = tuple(cycle)
        super().__init__(f"orientation has a directed cycle: {' -> '.join(map(str, self.cycle))}")


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _norm(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    vertex_count: int
    edges: frozenset = frozenset()
    labels: tuple | None = None

    def __post_init__(self):
        if self.vertex_count < 0:
            raise ValueError("vertex_count must be nonnegative")
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"self-loop at {u}")
            if not (0 <= u < v < self.vertex_count):
                raise ValueError(f"edge ({u}, {v}) is not a normalized in-range pair")
        if self.labels is not None and len(self.labels) != self.vertex_count:
            raise ValueError("labels must have one entry per vertex")

    @classmethod
    def from_edges(cls, vertex_count: int, edges: Iterable[tuple[int, int]], labels=None) -> Graph:
        normalized = set()
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at {u}")
            e = _norm(u, v)
            if e in normalized:
                raise ValueError(f"duplicate edge {e}")
            normalized.add(e)
        return cls(vertex_count, frozenset(normalized), tuple(labels) if labels is not None else None)

    @cached_property
    def edge_list(self) -> tuple[tuple[int, int], ...]:
        return tuple(sorted(self.edges))

    @cached_property
    def edge_index(self) -> dict[tuple[int, int], int]:
        return {e: i for i, e in enumerate(self.edge_list)}

    @cached_property
    def neighbors(self) -> tuple[tuple[int, ...], ...]:
        adj: list[list[int]] = [[] for _ in range(self.vertex_count)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return tuple(tuple(sorted(a)) for a in adj)

    @cached_property
    def adj_bits(self) -> tuple[int, ...]:
        bits = [0] * self.vertex_count
        for u, v in self.edges:
            bits[u] |= 1 << v
            bits[v] |= 1 << u
        return tuple(bits)

    def has_edge(self, u: int, v: int) -> bool:
        return _norm(u, v) in self.edges

    def degree(self, v: int) -> int:
        return len(self.neighbors[v])

    def label(self, v: int) -> str:
        return self.labels[v] if self.labels is not None else str(v)

    def index_of(self, label: str) -> int:
        if self.labels is None:
            return int(label)
        try:
            return self._label_index[label]
        except KeyError:
            raise KeyError(f"no vertex labeled {label!r}") from None

    @cached_property
    def _label_index(self) -> dict[str, int]:
        return {lab: i for i, lab in enumerate(self.labels or ())}

    def components(self) -> list[list[int]]:
        seen = [False] * self.vertex_count
        comps = []
        for s in range(self.vertex_count):
            if seen[s]:
                continue
            seen[s] = True
            comp, queue = [s], deque([s])
            while queue:
                x = queue.popleft()
                for y in self.neighbors[x]:
                    if not seen[y]:
                        seen[y] = True
                        comp.append(y)
                        queue.append(y)
            comps.append(sorted(comp))
        return comps

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Return the isomorphic copy where vertex v becomes perm[v]."""
        labels = None
        if self.labels is not None:
            new = [""] * self.vertex_count
            for v, lab in enumerate(self.labels):
                new[perm[v]] = lab
            labels = tuple(new)
        return Graph.from_edges(self.vertex_count, ((perm[u], perm[v]) for u, v in self.edges), labels)


@dataclass(frozen=True)
class Orientation:
    """Directions for some (partial) or all (total) edges of ``base``."""

    base: Graph
    arcs: frozenset = frozenset()

    def __post_init__(self):
        seen = set()
        for t, h in self.arcs:
            e = _norm(t, h)
            if e not in self.base.edges:
                raise ValueError(f"arc {t}->{h} is not an edge of the base graph")
            if e in seen:
                raise ValueError(f"edge {e} is directed twice")
            seen.add(e)

    @classmethod
    def by_key(cls, graph: Graph, key: Sequence) -> Orientation:
        """Orient every edge from the endpoint with the smaller key."""
        arcs = []
        for u, v in graph.edges:
            if key[u] == key[v]:
                raise ValueError(f"equal keys on edge ({u}, {v})")
            arcs.append((u, v) if key[u] < key[v] else (v, u))
        return cls(graph, frozenset(arcs))

    @property
    def is_total(self) -> bool:
        return len(self.arcs) == len(self.base.edges)

    @cached_property
    def successors(self) -> tuple[tuple[int, ...], ...]:
        out: list[list[int]] = [[] for _ in range(self.base.vertex_count)]
        for t, h in self.arcs:
            out[t].append(h)
        return tuple(tuple(sorted(o)) for o in out)

    @cached_property
    def predecessors(self) -> tuple[tuple[int, ...], ...]:
        inn: list[list[int]] = [[] for _ in range(self.base.vertex_count)]
        for t, h in self.arcs:
            inn[h].append(t)
        return tuple(tuple(sorted(i)) for i in inn)

    @cached_property
    def out_bits(self) -> tuple[int, ...]:
        bits = [0] * self.base.vertex_count
        for t, h in self.arcs:
            bits[t] |= 1 << h
        return tuple(bits)

    def has_arc(self, t: int, h: int) -> bool:
        return (t, h) in self.arcs

    def arc_list(self) -> list[tuple[int, int]]:
        return sorted(self.arcs)

    def reversed(self) -> Orientation:
        return Orientation(self.base, frozenset((h, t) for t, h in self.arcs))

    def relabel(self, perm: Sequence[int]) -> Orientation:
        return Orientation(self.base.relabel(perm), frozenset((perm[t], perm[h]) for t, h in self.arcs))


@dataclass(frozen=True)
class ShortcutWitness:
    path: tuple[int, ...]
    missing_edge: tuple[int, int]

    def labelled(self, graph: Graph) -> dict:
        return {
            "path": [graph.label(v) for v in self.path],
            "shortcutting_edge": [graph.label(self.path[0]), graph.label(self.path[-1])],
            "missing_edge": [graph.label(v) for v in self.missing_edge],
        }


@dataclass(frozen=True)
class BipartitionResult:
    parts: tuple[frozenset, frozenset] | None = None
    odd_cycle: tuple[int, ...] | None = None

    @property
    def is_bipartite(self) -> bool:
        return self.parts is not None


@dataclass(frozen=True)
class ShortcuttingPath:
    path: tuple[int, ...]
    is_shortcut: bool
    shortcutting_edge: tuple[int, int] = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "shortcutting_edge", (self.path[0], self.path[-1]))


def _require_total(D: Orientation) -> None:
    if not D.is_total:
        raise ContractError(
            f"operation needs a total orientation ({len(D.arcs)} of {len(D.base.edges)} edges directed)"
        )


def find_directed_cycle(D: Orientation) -> tuple[int, ...] | None:
    """Some directed cycle of D as a closed walk (first vertex repeated at the end), or None.

    Partial orientations are allowed.
    """
    n = D.base.vertex_count
    succ = D.successors
    state = [0] * n  # 0 new, 1 on stack, 2 done
    parent = [-1] * n
    for root in range(n):
        if state[root]:
            continue
        stack = [(root, iter(succ[root]))]
        state[root] = 1
        while stack:
            x, it = stack[-1]
            for y in it:
                if state[y] == 0:
                    state[y] = 1
                    parent[y] = x
                    stack.append((y, iter(succ[y])))
                    break
                if state[y] == 1:
                    cycle = [x]
                    while cycle[-1] != y:
                        cycle.append(parent[cycle[-1]])
                    cycle.reverse()
                    return tuple(cycle) + (y,)
            else:
                state[x] = 2
                stack.pop()
    return None


def topological_order(D: Orientation) -> list[int]:
    """Kahn's algorithm, smallest available index first. Raises CycleError."""
    import heapq

    n = D.base.vertex_count
    indeg = [len(p) for p in D.predecessors]
    heap = [v for v in range(n) if indeg[v] == 0]
    heapq.heapify(heap)
    order = []
    while heap:
        x = heapq.heappop(heap)
        order.append(x)
        for y in D.successors[x]:
            indeg[y] -= 1
            if indeg[y] == 0:
                heapq.heappush(heap, y)
    if len(order) < n:
        raise CycleError(find_directed_cycle(D))
    return order


def is_acyclic(D: Orientation) -> bool:
    _require_total(D)
    return find_directed_cycle(D) is None


def _closures(D: Orientation, order: list[int]) -> tuple[list[int], list[int]]:
    n = D.base.vertex_count
    reach = [0] * n
    for x in reversed(order):
        r = 0
        for y in D.successors[x]:
            r |= reach[y] | (1 << y)
        reach[x] = r
    anc = [0] * n
    for x in order:
        a = 0
        for y in D.predecessors[x]:
            a |= anc[y] | (1 << y)
        anc[x] = a
    return reach, anc


def _path_within(D: Orientation, src: int, dst: int, allowed: int) -> list[int]:
    """Shortest directed src->dst path using only vertices in the ``allowed`` bitset."""
    if src == dst:
        return [src]
    prev = {src: -1}
    queue = deque([src])
    while queue:
        x = queue.popleft()
        for y in D.successors[x]:
            if y in prev or not (allowed >> y) & 1:
                continue
            prev[y] = x
            if y == dst:
                path = [y]
                while path[-1] != src:
                    path.append(prev[path[-1]])
                return path[::-1]
            queue.append(y)
    raise AssertionError(f"no path {src}->{dst} inside the allowed set")


def find_shortcut(D: Orientation) -> ShortcutWitness | None:
    """Return a shortcut witness in a total acyclic orientation, or None.

    For each arc u->v let J be the vertices on directed u->v paths (u and v
    included). The arc shortcuts something exactly when J contains x, z with
    x reaching z but x and z non-adjacent; every such pair sits on a u->v
    path of length at least 3 whose induced subgraph is not transitive.
    """
    _require_total(D)
    order = topological_order(D)
    reach, anc = _closures(D, order)
    adj = D.base.adj_bits
    for u, v in sorted(D.arcs):
        J = (reach[u] | (1 << u)) & (anc[v] | (1 << v))
        if J == (1 << u) | (1 << v):
            continue
        for x in iter_bits(J):
            bad = reach[x] & ~adj[x] & J
            if bad:
                z = (bad & -bad).bit_length() - 1
                path = (
                    _path_within(D, u, x, J)
                    + _path_within(D, x, z, J)[1:]
                    + _path_within(D, z, v, J)[1:]
                )
                return ShortcutWitness(tuple(path), (x, z))
    return None


def naive_find_shortcut(D: Orientation) -> ShortcutWitness | None:
    """Reference oracle: enumerate every directed path and test it directly."""
    _require_total(D)
    if find_directed_cycle(D) is not None:
        raise CycleError(find_directed_cycle(D))
    succ = D.successors
    for start in range(D.base.vertex_count):
        stack = [(start,)]
        while stack:
            path = stack.pop()
            if len(path) >= 4 and D.has_arc(path[0], path[-1]):
                for i in range(len(path)):
                    for j in range(i + 1, len(path)):
                        if not D.has_arc(path[i], path[j]):
                            return ShortcutWitness(path, (path[i], path[j]))
            for y in reversed(succ[path[-1]]):
                stack.append(path + (y,))
    return None


def check_witness(D: Orientation, w: ShortcutWitness) -> bool:
    p = w.path
    if len(p) < 4 or len(set(p)) != len(p):
        return False
    if not all(D.has_arc(a, b) for a, b in zip(p, p[1:])):
        return False
    if not D.has_arc(p[0], p[-1]):
        return False
    x, z = w.missing_edge
    return x in p and z in p and p.index(x) < p.index(z) and not D.has_arc(x, z)


def is_semi_transitive(D: Orientation) -> bool:
    _require_total(D)
    if find_directed_cycle(D) is not None:
        return False
    return find_shortcut(D) is None


def _is_transitive_path(D: Orientation, path: Sequence[int]) -> bool:
    return all(D.has_arc(path[i], path[j]) for i in range(len(path)) for j in range(i + 1, len(path)))


def enumerate_shortcutting_paths(D: Orientation, use_matrix_powers: bool = True) -> list[ShortcuttingPath]:
    """All directed paths v0 -> ... -> vk (k >= 3) whose endpoints are joined by the arc v0 -> vk.

    With ``use_matrix_powers`` the candidate (start, end, length) triples are
    taken from the positive entries of M and M^p (M the arc matrix) before any
    path is enumerated. Output order is lexicographic by vertex sequence.
    """
    _require_total(D)
    cyc = find_directed_cycle(D)
    if cyc is not None:
        raise CycleError(cyc)
    n = D.base.vertex_count
    succ = D.successors
    wanted: dict[int, set[int]] | None = None
    if use_matrix_powers and n:
        M = np.zeros((n, n), dtype=np.int64)
        for t, h in D.arcs:
            M[t, h] = 1
        wanted = {}
        P = M @ M
        for p in range(3, n):
            P = np.minimum(P @ M, 1)  # only positivity matters
            hits = np.argwhere((P > 0) & (M > 0))
            if not P.any():
                break
            for i, j in hits:
                wanted.setdefault(int(i), set()).add(int(j))
    result = []
    for start in range(n):
        if wanted is not None and start not in wanted:
            continue
        ends = wanted.get(start) if wanted is not None else None
        stack = [(start,)]
        while stack:
            path = stack.pop()
            last = path[-1]
            if len(path) >= 4 and D.has_arc(start, last) and (ends is None or last in ends):
                result.append(ShortcuttingPath(path, not _is_transitive_path(D, path)))
            for y in reversed(succ[last]):
                stack.append(path + (y,))
    result.sort(key=lambda sp: sp.path)
    return result


def bipartition(G: Graph) -> BipartitionResult:
    """Two-colour G by breadth-first search, or return an odd cycle."""
    n = G.vertex_count
    color = [-1] * n
    parent = [-1] * n
    depth = [0] * n
    for s in range(n):
        if color[s] != -1:
            continue
        color[s] = 0
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for y in G.neighbors[x]:
                if color[y] == -1:
                    color[y] = 1 - color[x]
                    parent[y] = x
                    depth[y] = depth[x] + 1
                    queue.append(y)
                elif color[y] == color[x]:
                    return BipartitionResult(odd_cycle=_odd_cycle(x, y, parent, depth))
    parts = (
        frozenset(v for v in range(n) if color[v] == 0),
        frozenset(v for v in range(n) if color[v] == 1),
    )
    return BipartitionResult(parts=parts)


def _odd_cycle(x: int, y: int, parent: list[int], depth: list[int]) -> tuple[int, ...]:
    left, right = [x], [y]
    while depth[left[-1]] > depth[right[-1]]:
        left.append(parent[left[-1]])
    while depth[right[-1]] > depth[left[-1]]:
        right.append(parent[right[-1]])
    while left[-1] != right[-1]:
        left.append(parent[left[-1]])
        right.append(parent[right[-1]])
    return tuple(left + right[-2::-1])


def check_odd_cycle(G: Graph, cycle: Sequence[int]) -> bool:
    if len(cycle) % 2 == 0 or len(cycle) < 3:
        return False
    return all(G.has_edge(cycle[i], cycle[(i + 1) % len(cycle)]) for i in range(len(cycle)))


def induced_subgraph(G: Graph, vertices: Iterable[int]) -> Graph:
    """Subgraph on ``vertices``, renumbered in increasing order of the original index."""
    keep = sorted(set(vertices))
    for v in keep:
        if not 0 <= v < G.vertex_count:
            raise IndexError(f"vertex {v} out of range for a graph on {G.vertex_count} vertices")
    index = {v: i for i, v in enumerate(keep)}
    edges = [(index[u], index[v]) for u, v in G.edges if u in index and v in index]
    labels = tuple(G.labels[v] for v in keep) if G.labels is not None else None
    return Graph.from_edges(len(keep), edges, labels)
