import random

import pytest
from hypothesis import given, settings

from ccenum import (
    CyclicGraphError,
    Digraph,
    GraphError,
    ParseError,
    UndirectedGraph,
    VertexSet,
    acyclic_ordering,
    format_edge_list,
    gen_random_dag,
    is_connected_set,
    is_convex,
    orient_bipartite,
    parse_digraph,
    parse_undirected,
    transitive_closure,
)
from helpers import (
    EXAMPLE_ARCS,
    all_paths,
    dags,
    naive_is_connected,
    naive_is_convex,
    nonempty_subsets,
)


class TestParse:
    def test_example(self, example):
        assert (example.n, example.m) == (5, 5)
        assert sorted(example.arcs()) == sorted(EXAMPLE_ARCS)

    def test_single_vertex(self):
        d = parse_digraph("1 0")
        assert (d.n, d.m) == (1, 0)

    def test_self_loop_names_line(self):
        with pytest.raises(ParseError, match="line 2.*self-loop"):
            parse_digraph("2 1\n0 0")

    def test_out_of_range(self):
        with pytest.raises(ParseError, match="line 3"):
            parse_digraph("2 2\n0 1\n0 2\n")

    @pytest.mark.parametrize("text", ["", "# only a comment\n", "3\n", "a b\n", "2 1 7\n0 1\n"])
    def test_bad_header(self, text):
        with pytest.raises(ParseError):
            parse_digraph(text)

    def test_edge_count_must_match_header(self):
        with pytest.raises(ParseError, match="declares 2"):
            parse_digraph("3 2\n0 1\n")
        with pytest.raises(ParseError, match="more than"):
            parse_digraph("3 1\n0 1\n1 2\n")

    def test_comments_blank_lines_and_bytes(self):
        d = parse_digraph(b"# header next\n\n3 2\n# arcs\n0 1\n\n1 2\n")
        assert d.arcs() == [(0, 1), (1, 2)]

    def test_parallel_arcs_deduplicated(self):
        d = parse_digraph("2 3\n0 1\n0 1\n0 1\n")
        assert d.m == 1 and d.in_adj[1] == (0,)

    def test_undirected(self):
        g = parse_undirected("3 3\n0 1\n1 0\n1 2\n")
        assert g.m == 2 and g.adj == ((1,), (0, 2), (1,))

    def test_round_trip(self):
        d = gen_random_dag(9, 0.4, 3)
        assert parse_digraph(format_edge_list(d)) == d

    def test_from_arcs_validates(self):
        with pytest.raises(GraphError):
            Digraph.from_arcs(2, [(1, 1)])
        with pytest.raises(GraphError):
            UndirectedGraph.from_edges(2, [(0, 5)])


class TestOrdering:
    def test_example_is_identity(self, example):
        assert acyclic_ordering(example).order == (0, 1, 2, 3, 4)

    def test_single_vertex(self):
        assert acyclic_ordering(parse_digraph("1 0")).order == (0,)

    def test_lowest_index_first(self):
        d = Digraph.from_arcs(4, [(3, 0), (2, 1)])
        assert acyclic_ordering(d).order == (2, 1, 3, 0)

    def test_two_cycle(self):
        with pytest.raises(CyclicGraphError) as info:
            acyclic_ordering(parse_digraph("2 2\n0 1\n1 0"))
        assert sorted(info.value.cycle) == [0, 1]

    def test_cycle_witness_is_a_cycle(self):
        d = Digraph.from_arcs(6, [(0, 1), (1, 2), (2, 3), (3, 1), (4, 5)])
        with pytest.raises(CyclicGraphError) as info:
            acyclic_ordering(d)
        cyc = info.value.cycle
        arcs = set(d.arcs())
        assert all((cyc[i], cyc[(i + 1) % len(cyc)]) in arcs for i in range(len(cyc)))

    @given(dags(max_n=12))
    def test_all_arcs_point_forward(self, d):
        ordering = acyclic_ordering(d)
        assert sorted(ordering.order) == list(range(d.n))
        assert all(ordering.rank[ordering.order[i]] == i for i in range(d.n))
        assert all(ordering.rank[u] < ordering.rank[v] for u, v in d.arcs())


class TestClosure:
    def test_example_adds_three_arcs(self, example):
        c = transitive_closure(example, acyclic_ordering(example))
        added = set(c.as_digraph().arcs()) - set(example.arcs())
        assert added == {(0, 2), (1, 4), (0, 4)}

    def test_arcless(self):
        d = Digraph.from_arcs(4, [])
        assert all(not s for s in transitive_closure(d).succ)

    def test_path(self):
        d = Digraph.from_arcs(4, [(0, 1), (1, 2), (2, 3)])
        assert list(transitive_closure(d).succ[0]) == [1, 2, 3]

    @given(dags(max_n=12))
    def test_matches_bfs_and_is_consistent(self, d):
        c = d.closure
        for u in range(d.n):
            seen, stack = set(), [u]
            while stack:
                for w in d.out_adj[stack.pop()]:
                    if w not in seen:
                        seen.add(w)
                        stack.append(w)
            assert set(c.succ[u]) == seen
            assert u not in c.succ[u]
            for v in c.succ[u]:
                assert u in c.pred[v]
                assert c.succ[v].issubset(c.succ[u])

    @given(dags(max_n=12))
    def test_idempotent(self, d):
        once = d.closure
        twice = once.as_digraph().closure
        assert twice.succ_bits == once.succ_bits


class TestPredicates:
    def test_example_values(self, example):
        assert is_convex(example, example.vertex_set([0, 1, 3]))
        assert not is_convex(example, example.vertex_set([1, 4]))
        assert not is_connected_set(example, example.vertex_set([0, 4]))
        assert is_connected_set(example, example.vertex_set([3, 4]))

    def test_singletons(self, example):
        for v in range(5):
            s = example.vertex_set([v])
            assert is_convex(example, s) and is_connected_set(example, s)

    def test_empty_is_a_contract_violation(self, example):
        with pytest.raises(ValueError):
            is_convex(example, VertexSet(5))
        with pytest.raises(ValueError):
            is_connected_set(example, VertexSet(5))

    @settings(max_examples=60, deadline=None)
    @given(dags(max_n=8))
    def test_agree_with_path_enumeration(self, d):
        arcs = d.arcs()
        paths = all_paths(d.n, arcs)
        for s in nonempty_subsets(d.n):
            vs = d.vertex_set(s)
            assert is_convex(d, vs) == naive_is_convex(d.n, arcs, s, paths)
            assert is_connected_set(d, vs) == naive_is_connected(arcs, s)


def test_cc_sets_invariant_under_closure():
    rng = random.Random(7)
    for k in range(100):
        d = gen_random_dag(rng.randint(1, 12), rng.choice([0.1, 0.3, 0.6]), k)
        tc = d.closure.as_digraph()
        for bits in range(1, 1 << d.n):
            in_d = is_convex(d, bits) and is_connected_set(d, bits)
            assert in_d == (is_convex(tc, bits) and is_connected_set(tc, bits))


def test_orient_bipartite():
    g = UndirectedGraph.from_edges(4, [(0, 1), (1, 2), (2, 3)])
    assert sorted(orient_bipartite(g).arcs()) == [(0, 1), (2, 1), (2, 3)]
    with pytest.raises(GraphError):
        orient_bipartite(UndirectedGraph.from_edges(3, [(0, 1), (1, 2), (0, 2)]))
