"""Alternation in words and word-representants of graphs."""

from __future__ import annotations

from typing import Hashable, Sequence

from .graph import Graph, iter_bits


class SearchBudgetExceeded(RuntimeError):
    pass


def alternate(w: Sequence[Hashable], x: Hashable, y: Hashable) -> bool:
    """True iff the letters x and y alternate in w (restricting w to {x, y})."""
    if x == y:
        raise ValueError("alternation is defined for two distinct letters")
    last = None
    for c in w:
        if c == x or c == y:
            if c == last:
                return False
            last = c
    return True


def graph_of_word(w: Sequence[Hashable], vertices: Sequence[Hashable]) -> Graph:
    """Graph on ``vertices`` whose edges are the alternating pairs of w."""
    vertices = list(vertices)
    present = set(w)
    missing = [v for v in vertices if v not in present]
    if missing:
        raise ValueError(f"letters {missing!r} do not occur in the word")
    # one pass per pair over the positions of just those two letters
    positions: dict[Hashable, list[int]] = {v: [] for v in vertices}
    for i, c in enumerate(w):
        if c in positions:
            positions[c].append(i)
    edges = []
    for a in range(len(vertices)):
        pa = positions[vertices[a]]
        for b in range(a + 1, len(vertices)):
            if _positions_alternate(pa, positions[vertices[b]]):
                edges.append((a, b))
    return Graph.from_edges(len(vertices), edges, [str(v) for v in vertices])


def _positions_alternate(pa: list[int], pb: list[int]) -> bool:
    if abs(len(pa) - len(pb)) > 1:
        return False
    merged = sorted([(p, 0) for p in pa] + [(p, 1) for p in pb])
    return all(merged[i][1] != merged[i + 1][1] for i in range(len(merged) - 1))


def represents(w: Sequence[int], G: Graph) -> bool:
    if set(w) != set(range(G.vertex_count)):
        raise ValueError("the word's alphabet must be exactly the vertex set of the graph")
    return graph_of_word(w, range(G.vertex_count)).edges == G.edges


def find_uniform_word(G: Graph, k_max: int, node_budget: int = 5_000_000) -> tuple[int, ...] | None:
    """Search t-uniform words (every vertex exactly t times) for t = 1..k_max.

    A returned word always represents G; None proves nothing. Rotating a
    uniform word preserves alternation of every pair, so the first letter is
    fixed to vertex 0 without losing completeness for a given t.
    """
    if k_max < 1:
        raise ValueError("k_max must be >= 1")
    n = G.vertex_count
    if n == 0:
        return ()
    adj = G.adj_bits
    nodes = 0
    full = (1 << n) - 1
    for t in range(1, k_max + 1):
        counts = [0] * n
        # seen_after[v]: letters occurring after the latest copy of v
        seen_after = [0] * n
        broken = [0] * n  # broken[v]: non-neighbours u for which u, v already fail to alternate
        word: list[int] = []
        length = n * t

        def place(v: int) -> tuple | None:
            # every neighbour of v must occur between two consecutive copies of v
            if counts[v] and adj[v] & ~seen_after[v]:
                return None
            saved = (list(seen_after), list(broken))
            if counts[v]:
                for u in iter_bits(~seen_after[v] & full & ~(1 << v)):
                    broken[v] |= 1 << u
                    broken[u] |= 1 << v
            bit = 1 << v
            for u in range(n):
                seen_after[u] |= bit
            seen_after[v] = 0
            counts[v] += 1
            word.append(v)
            return saved

        def undo(v: int, saved: tuple) -> None:
            word.pop()
            counts[v] -= 1
            seen_after[:] = saved[0]
            broken[:] = saved[1]

        def done_pairs_ok(v: int) -> bool:
            # once both letters are exhausted, a non-adjacent pair must already be broken
            if counts[v] != t:
                return True
            nonadj = ~adj[v] & full & ~(1 << v)
            for u in iter_bits(nonadj):
                if counts[u] == t and not (broken[v] >> u) & 1:
                    return False
            return True

        def search() -> bool:
            nonlocal nodes
            if len(word) == length:
                return True
            nodes += 1
            if nodes > node_budget:
                raise SearchBudgetExceeded(f"uniform-word search exceeded {node_budget} nodes")
            for v in range(n) if word else (0,):
                if counts[v] == t:
                    continue
                saved = place(v)
                if saved is None:
                    continue
                if done_pairs_ok(v) and search():
                    return True
                undo(v, saved)
            return False

        if search():
            return tuple(word)
    return None

