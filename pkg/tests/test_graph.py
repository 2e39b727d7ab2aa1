import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import dominates
from strategies import edge_lists, float_weighted_graphs, graphs
from wdom.graph import (
    GraphFormatError, build_graph, is_dominating, is_minimal_dominating, parse_graph,
    serialize_graph, set_weight,
)

P3 = build_graph(3, [(0, 1), (1, 2)], [3.0, 1.0, 2.0])


def test_single_vertex():
    g = build_graph(1, [], [1])
    assert (g.min_degree, g.max_degree, g.total_weight, g.m) == (0, 0, 1.0, 0)


def test_path_stats():
    g = build_graph(3, [(0, 1), (1, 2)], [1, 1, 1])
    assert (g.min_degree, g.max_degree, g.total_weight, g.m) == (1, 2, 3.0, 2)
    assert g.neighbors(1).tolist() == [0, 2]
    assert g.w_ave == 1.0


@pytest.mark.parametrize("edges", [[(0, 1), (0, 1)], [(0, 1), (1, 0)]])
def test_duplicate_edge_rejected(edges):
    with pytest.raises(ValueError, match="duplicate"):
        build_graph(3, edges, [1, 1, 1])


@pytest.mark.parametrize("n,edges,weights", [
    (3, [(0, 3)], [1, 1, 1]),
    (3, [(1, 1)], [1, 1, 1]),
    (3, [], [1, 1]),
    (2, [], [1, float("inf")]),
    (2, [], [1, float("nan")]),
])
def test_build_rejections(n, edges, weights):
    with pytest.raises(ValueError):
        build_graph(n, edges, weights)


def test_immutable():
    with pytest.raises(AttributeError):
        P3.n = 4
    with pytest.raises(ValueError):
        P3.adj[0, 2] = True
    with pytest.raises(ValueError):
        P3.weights[0] = 0


def test_domination_examples():
    assert is_dominating(P3, {1})
    assert not is_dominating(P3, {0})
    assert not is_dominating(P3, set())
    with pytest.raises(ValueError):
        is_dominating(P3, {3})


def test_set_weight_examples():
    assert set_weight(P3, set()) == 0
    assert set_weight(P3, {1}) == 1
    assert set_weight(P3, {0, 1, 2}) == P3.total_weight


def test_minimality_predicate():
    star = build_graph(4, [(0, 1), (0, 2), (0, 3)], [1] * 4)
    assert is_minimal_dominating(star, {0})
    assert is_minimal_dominating(star, {1, 2, 3})
    assert not is_minimal_dominating(star, {0, 1})
    assert not is_minimal_dominating(star, {1, 2})


K2_TEXT = "p wdom 2 1\nw 1 1\nw 2 2\ne 1 2\n"


def test_serialize_k2_exact_bytes():
    assert serialize_graph(build_graph(2, [(0, 1)], [1, 2])) == K2_TEXT


def test_parse_k2():
    g = parse_graph("c a comment\n" + K2_TEXT)
    assert g == build_graph(2, [(0, 1)], [1, 2])


@pytest.mark.parametrize("text", [
    "p wdom 2 2\nw 1 1\nw 2 2\ne 1 2\n",           # header claims 2 edges
    "p wdom 2 1\nw 1 1\ne 1 2\n",                   # missing weight line
    "w 1 1\np wdom 1 0\n",                          # header not first
    "p wdom 2 1\nw 1 1\nw 2 x\ne 1 2\n",            # bad weight
    "p wdom 2 1\nw 1 1\nw 2 2\ne 1 3\n",            # out of range
    "p wdom 2 1\nw 1 1\nw 2 2\ne 1 1\n",            # self-loop
    "p wdom 2 0\nw 1 1\nw 2 2\nq 1 2\n",            # unknown line
    "p wdom 2 0\nw 1 1\nw 1 2\n",                   # repeated weight
    "",
])
def test_parse_rejections(text):
    with pytest.raises(GraphFormatError):
        parse_graph(text)


@settings(max_examples=1000)
@given(float_weighted_graphs(max_n=60))
def test_round_trip(g):
    assert parse_graph(serialize_graph(g)) == g


@given(graphs(max_n=15))
def test_cached_stats_match_recomputation(g):
    deg = [len(g.neighbors(v)) for v in range(g.n)]
    assert g.degrees.tolist() == deg
    assert g.min_degree == min(deg) and g.max_degree == max(deg)
    assert g.m == len(g.edges()) == sum(deg) // 2
    assert g.total_weight == sum(float(w) for w in g.weights)
    for u, v in g.edges():
        assert u < v and g.adj[v, u]


@given(edge_lists(max_n=12), st.data())
def test_is_dominating_matches_oracle(ne, data):
    n, edges = ne
    g = build_graph(n, edges, [1.0] * n)
    s = data.draw(st.sets(st.integers(0, n - 1)))
    assert is_dominating(g, s) == dominates(n, edges, s)
    assert is_dominating(g, range(n))
    assert not is_dominating(g, set())


def test_mask_input():
    assert is_dominating(P3, np.array([False, True, False]))
