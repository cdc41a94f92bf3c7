import pytest

from ccenum import (
    OracleCapError,
    SetFamily,
    UndirectedGraph,
    brute_cc,
    brute_connected,
    brute_convex,
    gen_kpq,
    gen_path,
    gen_random_dag,
    parse_digraph,
)
from helpers import naive_families


def test_example_cc(example):
    assert len(brute_cc(example)) == 17


def test_single_arc():
    assert brute_cc(parse_digraph("2 1\n0 1")).as_lists() == [[0], [0, 1], [1]]


def test_k22():
    d = gen_kpq(2, 2)
    assert len(brute_cc(d)) == 13
    assert len(brute_convex(d)) == 15


@pytest.mark.parametrize("d,size", [(gen_path(3), 6), (parse_digraph("1 0"), 1)])
def test_convex_sizes(d, size):
    assert len(brute_convex(d)) == size


def test_connected_sizes():
    tri = UndirectedGraph.from_edges(3, [(0, 1), (1, 2), (0, 2)])
    assert len(brute_connected(tri)) == 7
    assert len(brute_connected(UndirectedGraph.from_edges(3, [(0, 1), (1, 2)]))) == 6
    assert len(brute_connected(UndirectedGraph.from_edges(2, []))) == 2


def test_cap():
    with pytest.raises(OracleCapError):
        brute_cc(gen_path(21))
    with pytest.raises(OracleCapError):
        brute_convex(gen_path(6), cap=5)


def test_family_canonical_order_and_dedup():
    fam = SetFamily(4, [[2, 3], [0], [0, 1], [2, 3], [1]])
    assert fam.as_lists() == [[0], [0, 1], [1], [2, 3]]
    assert [1] in fam and [3] not in fam
    assert fam == SetFamily(4, [[1], [0, 1], [2, 3], [0]])


@pytest.mark.parametrize("seed", range(15))
def test_agrees_with_path_definition(seed):
    d = gen_random_dag(7, 0.35, seed)
    cc, convex = naive_families(d)
    assert [tuple(s) for s in brute_cc(d).as_lists()] == cc
    assert [tuple(s) for s in brute_convex(d).as_lists()] == convex


@pytest.mark.parametrize("seed", range(10))
def test_cc_family_same_on_closure(seed):
    d = gen_random_dag(10, 0.3, seed)
    assert brute_cc(d) == brute_cc(d.closure.as_digraph())


@pytest.mark.parametrize("seed", range(10))
def test_convex_family_closed_under_end_deletion(seed):
    d = gen_random_dag(9, 0.3, seed)
    fam = brute_convex(d)
    for s in fam:
        for v in s:
            if not d.in_mask[v] & s.bits or not d.out_mask[v] & s.bits:
                rest = [u for u in s if u != v]
                if rest:
                    assert rest in fam
