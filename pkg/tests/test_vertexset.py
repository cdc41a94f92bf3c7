import pytest
from hypothesis import given
from hypothesis import strategies as st

from ccenum import VertexSet


def test_basic_queries():
    s = VertexSet.of(10, [7, 2, 5])
    assert len(s) == s.count == 3
    assert s.min() == 2 and s.max() == 7
    assert list(s) == [2, 5, 7]
    assert 5 in s and 4 not in s and 42 not in s


def test_empty_min_max_raise():
    with pytest.raises(ValueError):
        VertexSet(3).min()
    with pytest.raises(ValueError):
        VertexSet(3).max()


def test_rejects_out_of_range():
    with pytest.raises(ValueError):
        VertexSet.of(3, [3])
    with pytest.raises(ValueError):
        VertexSet(3, 0b1000)


def test_immutable():
    s = VertexSet.of(4, [1])
    with pytest.raises(AttributeError):
        s.bits = 0


def test_mixed_universes_rejected():
    with pytest.raises(ValueError):
        VertexSet(3, 1) | VertexSet(4, 1)


@given(st.sets(st.integers(0, 40)), st.sets(st.integers(0, 40)))
def test_set_algebra_matches_builtin_sets(a, b):
    va, vb = VertexSet.of(41, a), VertexSet.of(41, b)
    assert set(va | vb) == a | b
    assert set(va & vb) == a & b
    assert set(va - vb) == a - b
    assert (va | vb).count == len(a | b)
    assert va.isdisjoint(vb) == a.isdisjoint(b)
    assert va.issubset(vb) == (a <= b)
    assert (va == vb) == (a == b)
