import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from semirep.engine import Verdict, decide
from semirep.families import complete, wheel
from semirep.graph import Graph
from semirep.words import SearchBudgetExceeded, alternate, find_uniform_word, graph_of_word, represents

from oracles import graph_of_word_bruteforce, graphs


def test_alternate():
    assert alternate("xyxy", "x", "y")
    assert not alternate("xxy", "x", "y")
    assert alternate("xyz", "x", "z")
    assert alternate("", "x", "y")
    with pytest.raises(ValueError):
        alternate("xy", "x", "x")


def test_graph_of_word_examples():
    assert graph_of_word("abab", "ab").edges == {(0, 1)}
    assert not graph_of_word("aabb", "ab").edges
    assert len(graph_of_word("xyz", "xyz").edges) == 3
    with pytest.raises(ValueError):
        graph_of_word("xy", "xyz")


@given(st.lists(st.integers(0, 4), min_size=0, max_size=14))
def test_graph_of_word_oracle(w):
    w = list(range(5)) + w
    G = graph_of_word(w, range(5))
    assert G.edges == graph_of_word_bruteforce(w, 5)
    assert graph_of_word(w[::-1], range(5)).edges == G.edges


def test_represents():
    assert represents((0, 1, 2), complete(3))
    assert not represents((0, 1, 0, 1, 2), complete(3))
    with pytest.raises(ValueError):
        represents((0, 1), complete(3))


def test_uniform_word_examples():
    w = find_uniform_word(complete(3), 1)
    assert sorted(w) == [0, 1, 2]
    w = find_uniform_word(Graph(2), 2)
    assert sorted(w) == [0, 0, 1, 1] and represents(w, Graph(2))
    c4 = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    w = find_uniform_word(c4, 2)
    assert w is not None and len(w) == 8 and represents(w, c4)


def test_wheel_has_no_short_uniform_word():
    assert find_uniform_word(wheel(5), 3) is None


def test_budget():
    with pytest.raises(SearchBudgetExceeded):
        find_uniform_word(wheel(5), 3, node_budget=10)


def test_every_graph_on_five_vertices():
    pairs = list(itertools.combinations(range(5), 2))
    for mask in range(1 << len(pairs)):
        G = Graph.from_edges(5, [p for i, p in enumerate(pairs) if mask >> i & 1])
        w = find_uniform_word(G, 3)
        assert w is not None and represents(w, G), sorted(G.edges)


@given(graphs(max_n=6))
def test_found_word_agrees_with_decide(G):
    w = find_uniform_word(G, 3)
    if w is not None:
        assert represents(w, G)
        assert decide(G).verdict is Verdict.YES
