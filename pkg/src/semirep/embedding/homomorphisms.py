"""Vertex maps from the word graphs into oriented templates, and orientation lifting."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

from ..families import Word, increasing_subgraph, s_m, sp, word_label, words_of
from ..graph import Graph, Orientation, bipartition
from .forms import CASE_EVEN_SPLIT, CASE_ODD, classify_form, color_S0, scheme_for_length, tau
from .templates import COLOR_RANK, OrientedTemplate, template


class HomomorphismError(ValueError):
    def __init__(self, message: str, edge: tuple[int, int] | None = None):
        self.edge = edge
        super().__init__(message)


class InvariantViolation(AssertionError):
    """A computed object contradicts the statement it is supposed to witness."""


@dataclass(frozen=True)
class Homomorphism:
    source: Graph
    target: OrientedTemplate
    mapping: tuple[int, ...]  # template vertex index per source vertex

    def image(self, v: int) -> str:
        return self.target.vertices[self.mapping[v]]

    def violation(self) -> tuple[tuple[int, int], str] | None:
        """First edge that is not mapped onto a template edge, or None."""
        H = self.target.graph
        for u, v in self.source.edge_list:
            a, b = self.mapping[u], self.mapping[v]
            if a == b:
                return (u, v), f"both ends map to {self.target.vertices[a]} (fiber not independent)"
            if not H.has_edge(a, b):
                return (u, v), f"{self.target.vertices[a]}-{self.target.vertices[b]} is not a template edge"
        return None

    def verify(self) -> Homomorphism:
        bad = self.violation()
        if bad is not None:
            (u, v), why = bad
            raise HomomorphismError(
                f"edge {self.source.label(u)}-{self.source.label(v)}: {why}", (u, v)
            )
        return self

    def fibers(self) -> dict[str, list[int]]:
        out: dict[str, list[int]] = {name: [] for name in self.target.vertices}
        for v, t in enumerate(self.mapping):
            out[self.target.vertices[t]].append(v)
        return out


def _build(G: Graph, target: OrientedTemplate, assign: Callable[[int, Word], str]) -> Homomorphism:
    idx = target.index
    mapping = tuple(idx[assign(i, w)] for i, w in enumerate(words_of(G)))
    return Homomorphism(G, target, mapping).verify()


def lift(f: Homomorphism) -> Orientation:
    """Orient each edge uv of the source as f(u) -> f(v) in the template."""
    f.verify()
    arcs = f.target.arc_bits
    out = []
    for u, v in f.source.edges:
        a, b = f.mapping[u], f.mapping[v]
        out.append((u, v) if (arcs[a] >> b) & 1 else (v, u))
    return Orientation(f.source, frozenset(out))


def hom_triangle(n: int) -> Homomorphism:
    """S(n,2) -> transitively oriented triangle, through the form colouring."""
    G = s_m(n, 2, 0)
    colors = color_S0(n)
    return _build(G, template("TRIANGLE"), lambda i, w: colors[i])


def hom_sp(n: int) -> Homomorphism:
    """SP(n) -> S_0(n-1,2) via the descent word, the target oriented by colour."""
    if n < 3:
        raise ValueError("hom_sp needs n >= 3")
    G = sp(n)
    target = template(f"S0_colored({n - 1})")
    return _build(G, target, lambda i, w: word_label(tau(w)))


def _bipartition_parts(words: list[Word], n: int, m: int, k: int) -> dict[Word, int]:
    """Part (1 or 2) of each increasing word; part 1 holds each component's smallest word."""
    inc = increasing_subgraph(n, k, m)
    res = bipartition(inc)
    if not res.is_bipartite:
        cyc = [inc.label(v) for v in res.odd_cycle]
        raise InvariantViolation(f"S^<_{m}({n},{k}) has the odd cycle {'-'.join(cyc)}")
    part0 = res.parts[0]
    return {w: (1 if i in part0 else 2) for i, w in enumerate(words_of(inc))}


def _n_small_parts(n: int, m: int) -> Callable[[Word], int]:
    """Explicit parts for n = 3 (alphabet 4m) and n = 4 (alphabet 5m): A and B form part 1, C part 2."""
    top = (n + 1) * m  # 4m or 5m

    def part(w: Word) -> int:
        x1, xn = w[0], w[-1]
        if 0 <= x1 <= m - 1 and top - m <= xn <= top - 1:
            return 1  # A
        if m <= x1 <= 2 * m - 1 and top - m <= xn <= top - 1:
            return 1  # B
        if 0 <= x1 <= m - 1 and top - 2 * m <= xn <= top - m - 1:
            return 2  # C
        raise InvariantViolation(f"increasing word {word_label(w)} is in none of A, B, C")

    return part


def _is_increasing(w: Word, m: int) -> bool:
    return all(b - a >= m for a, b in zip(w, w[1:]))


def _is_decreasing(w: Word, m: int) -> bool:
    return all(a - b >= m for a, b in zip(w, w[1:]))


def _odd_map(part_of: Callable[[Word], int], m: int, scheme) -> Callable[[int, Word], str]:
    def assign(i: int, w: Word) -> str:
        if _is_increasing(w, m):
            return "R2" if part_of(w) == 2 else "R'"
        if _is_decreasing(w, m):
            return "Rbar2" if part_of(w[::-1]) == 2 else "R'"
        form, color = classify_form(tau(w), scheme)
        return {"Red": "R'", "Blue": "B", "Green": "G"}[color]

    return assign


def _even_map(part_of: Callable[[Word], int], m: int) -> Callable[[int, Word], str]:
    by_form = {"e0a1": "R1", "e1a0": "R2", "o1o0a1": "B3", "o1e0b1": "B4", "o0o1a0": "G3", "o0e1b0": "G4"}

    def assign(i: int, w: Word) -> str:
        if _is_increasing(w, m):
            return f"B{part_of(w)}"
        if _is_decreasing(w, m):
            return f"G{part_of(w[::-1])}"
        form, _ = classify_form(tau(w), CASE_ODD)
        return by_form[str(form)]

    return assign


def hom_odd(n: int, m: int, k: int) -> Homomorphism:
    """S_m(n,k) -> FIG3 for odd n >= 5 and k <= 2mn."""
    if n < 5 or n % 2 == 0 or m < 1 or k > 2 * m * n:
        raise ValueError("hom_odd needs odd n >= 5, m >= 1, k <= 2mn")
    G = s_m(n, k, m)
    parts = _bipartition_parts(words_of(G), n, m, k)
    return _build(G, template("FIG3"), _odd_map(parts.__getitem__, m, CASE_EVEN_SPLIT))


def hom_n3(m: int, k: int | None = None) -> Homomorphism:
    """S_m(3,k) -> FIG3 for k <= 4m, using the explicit A, B, C split of the increasing words."""
    k = 4 * m if k is None else k
    if m < 1 or k > 4 * m:
        raise ValueError("hom_n3 needs m >= 1 and k <= 4m")
    G = s_m(3, k, m)
    part = _n_small_parts(3, m)

    def assign(i: int, w: Word) -> str:
        x1, x2, x3 = w
        if _is_increasing(w, m):
            return "R2" if part(w) == 2 else "R'"
        if _is_decreasing(w, m):
            return "Rbar2" if part(w[::-1]) == 2 else "R'"
        if x2 >= x1 + m and x2 >= x3 + m:
            return "B"
        if x2 <= x1 - m and x2 <= x3 - m:
            return "G"
        raise InvariantViolation(f"word {word_label(w)} is not a peak, valley or monotone")

    return _build(G, template("FIG3"), assign)


def hom_even(n: int, m: int, k: int) -> Homomorphism:
    """S_m(n,k) -> FIG4 for even n >= 6 and k <= 2mn."""
    if n < 6 or n % 2 or m < 1 or k > 2 * m * n:
        raise ValueError("hom_even needs even n >= 6, m >= 1, k <= 2mn")
    G = s_m(n, k, m)
    parts = _bipartition_parts(words_of(G), n, m, k)
    return _build(G, template("FIG4"), _even_map(parts.__getitem__, m))


def hom_n4(m: int, k: int | None = None) -> Homomorphism:
    """S_m(4,k) -> FIG6 for k <= 5m; same vertex map as hom_even, other orientation."""
    k = 5 * m if k is None else k
    if m < 1 or k > 5 * m:
        raise ValueError("hom_n4 needs m >= 1 and k <= 5m")
    G = s_m(4, k, m)
    return _build(G, template("FIG6"), _even_map(_n_small_parts(4, m), m))


def color_map_sp(words: Sequence[Word]) -> list[str]:
    """Colour of tau(w) in S_0(n-1,2) for each permutation w."""
    return [classify_form(tau(w), scheme_for_length(len(w) - 1))[1] for w in words]


def lex_orientation(G: Graph) -> Orientation:
    """Orient S_m(2,k) by lexicographic order of the words; there must be no directed path of length 3."""
    words = words_of(G)
    D = Orientation.by_key(G, words)
    longest = longest_path_length(D)
    if longest >= 3:
        raise InvariantViolation(f"lexicographic orientation has a directed path of length {longest}")
    return D


def longest_path_length(D: Orientation) -> int:
    from ..graph import topological_order

    depth = [0] * D.base.vertex_count
    for x in reversed(topological_order(D)):
        for y in D.successors[x]:
            depth[x] = max(depth[x], depth[y] + 1)
    return max(depth, default=0)


def rank_of(color: str) -> int:
    return COLOR_RANK[color]
