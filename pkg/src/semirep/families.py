"""Generators for the de Bruijn-type and overlapping-permutation graph families.

Words are tuples of ints. Every generator orders its vertices
lexicographically by word (or permutation), so vertex indices are stable.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from .graph import Graph

Word = tuple  # tuple[int, ...]

DEFAULT_VERTEX_BUDGET = 10**6

FAMILIES = (
    "debruijn",
    "simplified",
    "simplified_m",
    "overlap_perm",
    "simplified_overlap",
    "increasing",
    "decreasing",
    "wheel",
    "complete",
    "cluster",
)


class VertexBudgetError(RuntimeError):
    pass


def word_label(w: Sequence[int]) -> str:
    if all(0 <= x < 10 for x in w):
        return "".join(map(str, w))
    return ",".join(map(str, w))


def parse_word(s: str) -> Word:
    s = s.strip()
    if "," in s:
        return tuple(int(x) for x in s.split(","))
    return tuple(int(c) for c in s)


def words_of(G: Graph) -> list[Word]:
    if G.labels is None:
        raise ValueError("graph carries no word labels")
    return [parse_word(lab) for lab in G.labels]


@dataclass(frozen=True)
class Digraph:
    """Directed graph with loops allowed; used for B(n,k) and P(n)."""

    vertex_count: int
    arcs: frozenset
    labels: tuple | None = None

    def __post_init__(self):
        for t, h in self.arcs:
            if not (0 <= t < self.vertex_count and 0 <= h < self.vertex_count):
                raise ValueError(f"arc {t}->{h} out of range")

    def has_arc(self, t: int, h: int) -> bool:
        return (t, h) in self.arcs

    def index_of(self, label: str) -> int:
        return self.labels.index(label)


@dataclass(frozen=True)
class FamilySpec:
    family: str
    n: int
    k: int = 2
    m: int = 0
    words: tuple = ()  # member words for the cluster family

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}; choose from {', '.join(FAMILIES)}")
        if self.n < 1 or self.k < 1 or self.m < 0:
            raise ValueError("need n >= 1, k >= 1, m >= 0")
        if self.family in ("debruijn", "simplified", "simplified_m") and self.n < 2:
            raise ValueError(f"{self.family} needs n >= 2")
        if self.family in ("increasing", "decreasing") and (self.n < 2 or self.m < 1):
            raise ValueError(f"{self.family} needs n >= 2 and m >= 1")
        if self.family == "wheel" and self.n < 3:
            raise ValueError("wheel needs n >= 3")

    def describe(self) -> dict:
        d = {"family": self.family, "n": self.n, "k": self.k, "m": self.m}
        if self.words:
            d["words"] = [word_label(w) for w in self.words]
        return d


def count_words(n: int, m: int, k: int) -> int:
    """|A^n_m(k)| by a transfer count over the last letter."""
    counts = [1] * k
    for _ in range(n - 1):
        counts = [sum(c for y, c in enumerate(counts) if abs(x - y) >= m) for x in range(k)]
    return sum(counts) if k else 0


def _check_budget(count: int, budget: int | None) -> None:
    limit = DEFAULT_VERTEX_BUDGET if budget is None else budget
    if count > limit:
        raise VertexBudgetError(f"family would have {count} vertices, over the budget of {limit}")


def words_Anm(n: int, m: int, k: int, budget: int | None = None) -> list[Word]:
    """Words x1..xn over {0..k-1} with |x_i - x_{i+1}| >= m, in lexicographic order."""
    if n < 1 or k < 1 or m < 0:
        raise ValueError("need n >= 1, k >= 1, m >= 0")
    _check_budget(count_words(n, m, k), budget)
    if m == 0:
        return list(itertools.product(range(k), repeat=n))
    out: list[Word] = []

    def extend(prefix: list[int]) -> None:
        if len(prefix) == n:
            out.append(tuple(prefix))
            return
        last = prefix[-1]
        for x in range(k):
            if abs(x - last) >= m:
                prefix.append(x)
                extend(prefix)
                prefix.pop()

    for x in range(k):
        extend([x])
    return out


def de_bruijn(n: int, k: int, budget: int | None = None) -> Digraph:
    if n < 2:
        raise ValueError("de Bruijn graphs need n >= 2")
    words = words_Anm(n, 0, k, budget)
    index = {w: i for i, w in enumerate(words)}
    arcs = set()
    for i, w in enumerate(words):
        for c in range(k):
            arcs.add((i, index[w[1:] + (c,)]))
    return Digraph(len(words), frozenset(arcs), tuple(word_label(w) for w in words))


def simplify(D: Digraph) -> Graph:
    edges = {(min(t, h), max(t, h)) for t, h in D.arcs if t != h}
    return Graph(D.vertex_count, frozenset(edges), D.labels)


def _overlap_graph(words: list[Word]) -> Graph:
    """Simplified de Bruijn adjacency restricted to ``words``."""
    by_prefix: dict[Word, list[int]] = {}
    for j, w in enumerate(words):
        by_prefix.setdefault(w[:-1], []).append(j)
    edges = set()
    for i, w in enumerate(words):
        for j in by_prefix.get(w[1:], ()):
            if j != i:
                edges.add((min(i, j), max(i, j)))
    return Graph(len(words), frozenset(edges), tuple(word_label(w) for w in words))


def s_m(n: int, k: int, m: int = 0, budget: int | None = None) -> Graph:
    """S_m(n,k): the simplified de Bruijn graph S(n,k) induced on A^n_m(k)."""
    if n < 2:
        raise ValueError("S_m(n,k) needs n >= 2")
    return _overlap_graph(words_Anm(n, m, k, budget))


def simplified(n: int, k: int, budget: int | None = None) -> Graph:
    return s_m(n, k, 0, budget)


def increasing_words(n: int, m: int, k: int) -> list[Word]:
    """Words with x_{i+1} - x_i >= m, lexicographic; built from combinations by shifting."""
    if m < 1:
        raise ValueError("need m >= 1")
    span = k - (n - 1) * (m - 1)
    return [tuple(c + i * (m - 1) for i, c in enumerate(comb)) for comb in itertools.combinations(range(max(span, 0)), n)]


def decreasing_words(n: int, m: int, k: int) -> list[Word]:
    return sorted(w[::-1] for w in increasing_words(n, m, k))


def increasing_subgraph(n: int, k: int, m: int) -> Graph:
    """S^<_m(n,k), induced on the increasing words of A^n_m(k)."""
    if n < 2 or m < 1:
        raise ValueError("need n >= 2 and m >= 1")
    return _overlap_graph(increasing_words(n, m, k))


def decreasing_subgraph(n: int, k: int, m: int) -> Graph:
    if n < 2 or m < 1:
        raise ValueError("need n >= 2 and m >= 1")
    return _overlap_graph(decreasing_words(n, m, k))


def order_pattern(seq: Sequence[int]) -> tuple[int, ...]:
    """Ranks of the entries of a sequence of distinct numbers."""
    ranked = sorted(range(len(seq)), key=lambda i: seq[i])
    pattern = [0] * len(seq)
    for r, i in enumerate(ranked):
        pattern[i] = r
    return tuple(pattern)


def overlap_arc(x: Sequence[int], y: Sequence[int]) -> bool:
    """Pairwise definition of an arc x -> y in P(n)."""
    n = len(x)
    for i in range(1, n):
        for j in range(i + 1, n):
            if (x[i] < x[j]) != (y[i - 1] < y[j - 1]):
                return False
    return True


def overlap_perm(n: int, budget: int | None = None) -> Digraph:
    """P(n): arc x -> y iff x_2..x_n and y_1..y_{n-1} are order-isomorphic."""
    if n < 1:
        raise ValueError("need n >= 1")
    _check_budget(math.factorial(n), budget)
    perms = list(itertools.permutations(range(1, n + 1)))
    by_head: dict[tuple, list[int]] = {}
    for j, y in enumerate(perms):
        by_head.setdefault(order_pattern(y[:-1]), []).append(j)
    arcs = set()
    for i, x in enumerate(perms):
        for j in by_head.get(order_pattern(x[1:]), ()):
            arcs.add((i, j))
    return Digraph(len(perms), frozenset(arcs), tuple(word_label(p) for p in perms))


def sp(n: int, budget: int | None = None) -> Graph:
    return simplify(overlap_perm(n, budget))


def cluster_graph(A: Iterable, n: int | None = None) -> Graph:
    """Graph of non-trivial clusters of A; clusters are adjacent when they share a word."""
    words = sorted({parse_word(w) if isinstance(w, str) else tuple(w) for w in A})
    if n is None:
        n = len(words[0]) if words else 2
    if n < 2:
        raise ValueError("cluster graphs need word length n >= 2")
    if any(len(w) != n for w in words):
        raise ValueError(f"all words must have length {n}")
    clusters: dict[Word, set[Word]] = {}
    for w in words:
        clusters.setdefault(w[:-1], set()).add(w)
        clusters.setdefault(w[1:], set()).add(w)
    keys = sorted(key for key, members in clusters.items() if len(members) >= 2)
    edges = []
    for i, a in enumerate(keys):
        for j in range(i + 1, len(keys)):
            if clusters[a] & clusters[keys[j]]:
                edges.append((i, j))
    return Graph.from_edges(len(keys), edges, [word_label(w) for w in keys])


def scale_embed(w: Sequence[int], m: int) -> Word:
    if m < 1:
        raise ValueError("scale factor must be >= 1")
    return tuple(m * x for x in w)


def wheel(n: int) -> Graph:
    """Cycle 0..n-1 plus hub vertex n adjacent to all of it."""
    if n < 3:
        raise ValueError("wheel needs n >= 3")
    edges = [(i, (i + 1) % n) for i in range(n)] + [(i, n) for i in range(n)]
    return Graph.from_edges(n + 1, edges)


def complete(k: int) -> Graph:
    if k < 1:
        raise ValueError("need k >= 1")
    return Graph.from_edges(k, itertools.combinations(range(k), 2))


def build(spec: FamilySpec, budget: int | None = None) -> Graph | Digraph:
    """Materialize the family named by ``spec``."""
    f = spec.family
    if f == "debruijn":
        return de_bruijn(spec.n, spec.k, budget)
    if f == "simplified":
        return simplified(spec.n, spec.k, budget)
    if f == "simplified_m":
        return s_m(spec.n, spec.k, spec.m, budget)
    if f == "overlap_perm":
        return overlap_perm(spec.n, budget)
    if f == "simplified_overlap":
        return sp(spec.n, budget)
    if f == "increasing":
        return increasing_subgraph(spec.n, spec.k, spec.m)
    if f == "decreasing":
        return decreasing_subgraph(spec.n, spec.k, spec.m)
    if f == "wheel":
        return wheel(spec.n)
    if f == "complete":
        return complete(spec.n)
    return cluster_graph(spec.words, spec.n)


def reverse_map(G: Graph, H: Graph) -> list[int] | None:
    """Index map G -> H sending each word to its reversal, when all reversals are in H."""
    index = {lab: i for i, lab in enumerate(H.labels)}
    out = []
    for w in words_of(G):
        j = index.get(word_label(w[::-1]))
        if j is None:
            return None
        out.append(j)
    return out


__all__ = [
    "Word",
    "Digraph",
    "FamilySpec",
    "VertexBudgetError",
    "build",
    "cluster_graph",
    "complete",
    "count_words",
    "de_bruijn",
    "decreasing_subgraph",
    "increasing_subgraph",
    "order_pattern",
    "overlap_arc",
    "overlap_perm",
    "parse_word",
    "s_m",
    "scale_embed",
    "simplified",
    "simplify",
    "sp",
    "wheel",
    "word_label",
    "words_Anm",
    "words_of",
]
