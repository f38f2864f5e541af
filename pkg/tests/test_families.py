import itertools
import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from semirep.families import (
    FamilySpec,
    VertexBudgetError,
    build,
    cluster_graph,
    complete,
    count_words,
    de_bruijn,
    decreasing_subgraph,
    increasing_subgraph,
    order_pattern,
    overlap_arc,
    overlap_perm,
    parse_word,
    s_m,
    scale_embed,
    simplify,
    sp,
    wheel,
    word_label,
    words_Anm,
    words_of,
    Digraph,
)
from semirep.graph import induced_subgraph

from oracles import overlap_edges_bruteforce


def labelled_edges(G):
    return {frozenset((G.label(u), G.label(v))) for u, v in G.edges}


def words_bruteforce(n, m, k):
    return [w for w in itertools.product(range(k), repeat=n) if all(abs(a - b) >= m for a, b in zip(w, w[1:]))]


class TestWords:
    def test_examples(self):
        assert words_Anm(2, 1, 2) == [(0, 1), (1, 0)]
        assert [word_label(w) for w in words_Anm(3, 1, 2)] == ["010", "101"]
        assert len(words_Anm(2, 1, 4)) == 12

    @given(st.integers(1, 5), st.integers(0, 3), st.integers(1, 6))
    def test_matches_bruteforce(self, n, m, k):
        expected = words_bruteforce(n, m, k)
        assert words_Anm(n, m, k) == expected
        assert count_words(n, m, k) == len(expected)

    def test_budget(self):
        with pytest.raises(VertexBudgetError):
            words_Anm(10, 0, 10)
        with pytest.raises(VertexBudgetError):
            words_Anm(3, 0, 3, budget=5)

    def test_labels_round_trip(self):
        for w in [(0, 1, 2), (10, 2, 11)]:
            assert parse_word(word_label(w)) == w


class TestDeBruijn:
    def test_b32(self):
        B = de_bruijn(3, 2)
        assert B.vertex_count == 8
        loops = sorted(B.labels[t] for t, h in B.arcs if t == h)
        assert loops == ["000", "111"]
        assert B.has_arc(B.index_of("011"), B.index_of("110"))
        assert not B.has_arc(B.index_of("011"), B.index_of("101"))

    def test_b21(self):
        B = de_bruijn(2, 1)
        assert B.vertex_count == 1 and B.arcs == {(0, 0)}

    def test_s32_edges_as_drawn(self):
        # all 13 edges drawn for S(3,2)
        G = simplify(de_bruijn(3, 2))
        drawn = {
            ("111", "110"), ("000", "001"), ("101", "011"), ("010", "100"), ("010", "101"),
            ("110", "101"), ("110", "100"), ("100", "001"), ("100", "000"), ("001", "010"),
            ("001", "011"), ("011", "111"), ("011", "110"),
        }
        assert G.vertex_count == 8
        assert labelled_edges(G) == {frozenset(e) for e in drawn}
        assert len(G.edges) == 13

    def test_simplify(self):
        assert not simplify(Digraph(1, frozenset({(0, 0)}))).edges
        assert simplify(Digraph(2, frozenset({(0, 1), (1, 0)}))).edges == {(0, 1)}


class TestSimplifiedM:
    def test_s1_3_2(self):
        G = s_m(3, 2, 1)
        assert G.labels == ("010", "101") and G.edges == {(0, 1)}

    def test_s1_2_4(self):
        assert s_m(2, 4, 1).vertex_count == 12

    @given(st.integers(2, 4), st.integers(1, 4))
    def test_s0_is_s(self, n, k):
        assert s_m(n, k, 0) == simplify(de_bruijn(n, k))

    @given(st.integers(2, 4), st.integers(0, 2), st.integers(1, 6))
    def test_overlap_oracle(self, n, m, k):
        G = s_m(n, k, m)
        assert G.edges == overlap_edges_bruteforce(words_of(G))

    @given(st.integers(2, 4), st.integers(0, 2), st.integers(1, 5))
    def test_induced_in_larger_alphabet(self, n, m, k):
        small, big = s_m(n, k, m), s_m(n, k + 1, m)
        sub = induced_subgraph(big, [big.index_of(lab) for lab in small.labels])
        assert labelled_edges(sub) == labelled_edges(small)

    @given(st.integers(2, 4), st.integers(2, 4), st.integers(1, 3))
    def test_scale_embed_preserves_edges(self, n, k, m):
        G = s_m(n, k, 1)
        H = s_m(n, (k - 1) * m + 1, m)
        for u, v in G.edges:
            a = word_label(scale_embed(words_of(G)[u], m))
            b = word_label(scale_embed(words_of(G)[v], m))
            assert H.has_edge(H.index_of(a), H.index_of(b))

    def test_scale_embed_examples(self):
        assert scale_embed((0, 1, 2), 3) == (0, 3, 6)
        assert scale_embed((1, 0, 1), 1) == (1, 0, 1)
        H = s_m(2, 3, 2)
        assert H.has_edge(H.index_of("02"), H.index_of("20"))


class TestMonotone:
    def test_s_lt_1_2_3(self):
        G = increasing_subgraph(2, 3, 1)
        assert G.labels == ("01", "02", "12")
        assert labelled_edges(G) == {frozenset(("01", "12"))}

    def test_cycle_present(self):
        G = increasing_subgraph(2, 5, 1)
        cyc = ["01", "12", "23", "34", "13"]
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            assert G.has_edge(G.index_of(a), G.index_of(b))

    def test_empty_when_too_small(self):
        assert increasing_subgraph(3, 2, 1).vertex_count == 0
        assert increasing_subgraph(4, 6, 2).vertex_count == 0

    @given(st.integers(2, 5), st.integers(1, 3), st.integers(1, 14))
    def test_triangle_free_and_reversal(self, n, m, k):
        inc, dec = increasing_subgraph(n, k, m), decreasing_subgraph(n, k, m)
        for G in (inc, dec):
            adj = G.adj_bits
            assert all(not adj[u] & adj[v] for u, v in G.edges)
        wi, wd = words_of(inc), words_of(dec)
        reversed_edges = {frozenset((wi[u][::-1], wi[v][::-1])) for u, v in inc.edges}
        assert reversed_edges == {frozenset((wd[u], wd[v])) for u, v in dec.edges}
        assert inc.labels == tuple(word_label(w) for w in words_Anm(n, m, k) if all(b - a >= m for a, b in zip(w, w[1:])))


class TestPermutations:
    def test_p3(self):
        P = overlap_perm(3)
        idx = P.index_of
        assert P.has_arc(idx("123"), idx("123")) and P.has_arc(idx("321"), idx("321"))
        assert P.has_arc(idx("123"), idx("132"))
        assert P.has_arc(idx("213"), idx("132")) and P.has_arc(idx("132"), idx("213"))

    def test_p1(self):
        P = overlap_perm(1)
        assert P.vertex_count == 1 and P.arcs == {(0, 0)}

    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_pattern_arcs_match_pairwise_definition(self, n):
        P = overlap_perm(n)
        perms = [parse_word(lab) for lab in P.labels]
        pairwise = {(i, j) for i, x in enumerate(perms) for j, y in enumerate(perms) if overlap_arc(x, y)}
        assert P.arcs == pairwise

    def test_overlap_arc_definition(self):
        # x2..xn and y1..y(n-1) must be order-isomorphic
        for x in itertools.permutations(range(1, 5)):
            for y in itertools.permutations(range(1, 5)):
                same = all((x[i] < x[j]) == (y[i - 1] < y[j - 1]) for i in range(1, 4) for j in range(i + 1, 4))
                assert overlap_arc(x, y) == same

    def test_sp_small(self):
        S3 = sp(3)
        assert S3.vertex_count == 6 and len(S3.edges) == 12
        assert all(S3.degree(v) == 4 for v in range(6))
        assert sp(2).vertex_count == 2 and len(sp(2).edges) == 1
        assert sp(1).vertex_count == 1 and not sp(1).edges

    @pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
    def test_sp_vertex_count(self, n):
        assert sp(n).vertex_count == math.factorial(n)

    def test_order_pattern(self):
        assert order_pattern((5, 2, 9)) == (1, 0, 2)


class TestCluster:
    def test_example(self):
        G = cluster_graph([parse_word(w) for w in ("0123", "1234", "2123", "2345")])
        assert sorted(G.labels) == ["123", "234"]
        assert labelled_edges(G) == {frozenset(("123", "234"))}

    def test_no_overlap(self):
        G = cluster_graph([parse_word(w) for w in ("012", "345")])
        assert G.vertex_count == 0

    def test_triangle(self):
        G = cluster_graph([parse_word(w) for w in ("01", "12", "20")])
        assert sorted(G.labels) == ["0", "1", "2"] and len(G.edges) == 3

    def test_short_words_rejected(self):
        with pytest.raises(ValueError):
            cluster_graph([(0,), (1,)])


class TestSmallGraphs:
    def test_wheel(self):
        W = wheel(5)
        assert W.vertex_count == 6 and len(W.edges) == 10

    def test_complete(self):
        assert complete(1).vertex_count == 1
        assert len(complete(4).edges) == 6


class TestSpec:
    def test_validation(self):
        with pytest.raises(ValueError):
            FamilySpec("nope", 3)
        with pytest.raises(ValueError):
            FamilySpec("increasing", 3, 4, 0)
        with pytest.raises(ValueError):
            FamilySpec("wheel", 2)

    @pytest.mark.parametrize(
        "spec,vertices,edges",
        [
            (FamilySpec("simplified_m", 3, 2, 1), 2, 1),
            (FamilySpec("simplified_overlap", 3), 6, 12),
            (FamilySpec("wheel", 5), 6, 10),
            (FamilySpec("simplified", 3, 2), 8, 13),
            (FamilySpec("complete", 4), 4, 6),
        ],
    )
    def test_build(self, spec, vertices, edges):
        G = build(spec)
        assert (G.vertex_count, len(G.edges)) == (vertices, edges)
