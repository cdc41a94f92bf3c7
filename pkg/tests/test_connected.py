import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ccenum import (
    Collector,
    UndirectedGraph,
    brute_connected,
    count_cc,
    count_connected,
    enumerate_cc,
    enumerate_connected,
    gen_random_bipartite_graph,
    gen_random_connected_graph,
    is_connected_set,
    orient_bipartite,
)
from helpers import as_tuples, naive_connected_family, undirected_graphs


def collect(g, **kw):
    c = Collector()
    enumerate_connected(g, c, **kw)
    return [s.to_list() for s in c]


def test_triangle():
    assert count_connected(UndirectedGraph.from_edges(3, [(0, 1), (1, 2), (0, 2)])) == 7


def test_path_abc():
    g = UndirectedGraph.from_edges(3, [(0, 1), (1, 2)])
    assert collect(g) == [[0, 1, 2], [0, 1], [0], [1, 2], [1], [2]]


def test_single_vertex():
    assert collect(UndirectedGraph.from_edges(1, [])) == [[0]]


@pytest.mark.parametrize("edges,n,expected", [
    ([(0, 1), (0, 2), (0, 3)], 4, 11),
    ([(a, b) for a in range(4) for b in range(a + 1, 4)], 4, 15),
    ([(0, 1), (1, 2), (2, 3)], 4, 10),
])
def test_counts(edges, n, expected):
    assert count_connected(UndirectedGraph.from_edges(n, edges)) == expected


def test_disconnected_graph_accepted():
    g = UndirectedGraph.from_edges(4, [(0, 1), (2, 3)])
    assert collect(g) == [[0, 1], [0], [1], [2, 3], [2], [3]]


@settings(max_examples=80, deadline=None)
@given(undirected_graphs(max_n=8))
def test_exactly_once_against_definition(g):
    got = as_tuples(collect(g))
    assert len(got) == len(set(got))
    assert sorted(got) == naive_connected_family(g)


def test_exactly_once_against_oracle():
    for seed in range(30):
        g = gen_random_connected_graph(12, [0.1, 0.3, 0.6][seed % 3], seed)
        got = collect(g)
        assert len(got) == len({tuple(s) for s in got})
        assert sorted(got) == brute_connected(g).as_lists()


@settings(max_examples=40, deadline=None)
@given(undirected_graphs(max_n=10))
def test_frame_state_and_outputs(g):
    c = Collector()
    enumerate_connected(g, c, debug=True)
    assert all(is_connected_set(g, s) for s in c)


@pytest.mark.parametrize("seed", range(5))
def test_state_restored_between_siblings(seed):
    g = gen_random_connected_graph(8, 0.3, seed)
    frames = []
    enumerate_connected(g, None, trace=frames.append)
    pos = 0

    def subtree():
        # preorder: frame, then include-child subtree, then exclude-child subtree
        nonlocal pos
        f = frames[pos]
        pos += 1
        if not f.nx:
            return
        v = f.nx.min()
        gone = g.vertex_set([v])
        assert frames[pos].x == f.x | gone
        subtree()
        sibling = frames[pos]
        assert (sibling.x, sibling.y, sibling.nx) == (f.x, f.y - gone, f.nx - gone)
        subtree()

    while pos < len(frames):
        subtree()


@settings(max_examples=40, deadline=None)
@given(undirected_graphs(max_n=9), st.data())
def test_limit_gives_prefix(g, data):
    full = collect(g)
    k = data.draw(st.integers(0, len(full) + 2))
    assert collect(g, limit=k) == full[:k]


def test_bipartite_orientation_correspondence():
    for seed in range(20):
        g = gen_random_bipartite_graph(10, 0.4, seed)
        d = orient_bipartite(g)
        cc = Collector()
        enumerate_cc(d, cc)
        assert sorted(as_tuples(cc)) == sorted(as_tuples(collect(g)))
        assert count_cc(d) == count_connected(g)


def test_parallel_matches_serial():
    g = gen_random_connected_graph(10, 0.3, 9)
    assert collect(g, workers=3) == collect(g)
