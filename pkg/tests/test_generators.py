"""Named families: orders, degrees, partitions, and local edge rules."""

import pytest

from oriograph.core import Orientation, isomorphic_brute
from oriograph.generators import (
    blow_up,
    c3_barrier,
    cycle_power,
    d_abc,
    f_r,
    graph_s,
    rotational,
    semi_regular_tournament,
    t_sk,
    transitive,
)


def test_transitive():
    g = transitive(5)
    assert g.edge_count == 10
    assert g.score_multiset() == (0, 1, 2, 3, 4)
    assert all(g.has_edge(u, v) for u in range(5) for v in range(u + 1, 5))


def test_cycle_power():
    c52 = cycle_power(5, 2)
    assert c52.classify().is_regular
    c62 = cycle_power(6, 2)
    assert not c62.is_tournament()
    assert all(c62.degrees(v) == (2, 2) for v in range(6))
    assert c62.has_edge(4, 0) and c62.has_edge(5, 1)
    for k, length in ((2, 1), (5, 0), (5, 3), (6, 3)):
        with pytest.raises(ValueError):
            cycle_power(k, length)


def test_rotational():
    t7 = rotational(7, [1, 2, 4])
    assert t7.classify().is_regular
    assert all(t7.has_edge(v, (v + 2) % 7) for v in range(7))
    with pytest.raises(ValueError):
        rotational(6, [1, 2])
    with pytest.raises(ValueError):
        rotational(7, [1, 6])
    with pytest.raises(ValueError):
        rotational(7, [0])


def test_graph_s():
    s = graph_s()
    assert s.n == 5 and s.edge_count == 8
    assert s.orientation(0, 4) is Orientation.NONE
    assert s.orientation(3, 4) is Orientation.NONE
    for u, v in ((0, 1), (0, 2), (1, 2), (1, 3), (2, 3), (2, 4), (3, 0), (4, 1)):
        assert s.has_edge(u, v)


def test_d_abc():
    d, parts = d_abc(1, 1, 2)
    assert d.is_tournament()
    assert d.score_multiset() == (1, 1, 2, 2)
    assert parts.index_vector(range(4)) == (1, 1, 2)
    big, parts = d_abc(2, 3, 4)
    assert big.n == 9 and parts.index_vector(range(9)) == (2, 3, 4)
    # parts are transitive inside, cross edges go part p to part p+1 mod 3
    assert big.has_edge(5, 6) and not big.has_edge(6, 5)
    assert big.has_edge(0, 2) and big.has_edge(2, 5) and big.has_edge(5, 0)
    with pytest.raises(ValueError):
        d_abc(0, 1, 1)


def test_f_r():
    assert isomorphic_brute(f_r(1), rotational(3, [1]))
    f2 = f_r(2)
    assert f2.n == 9
    assert f2.classify().is_regular
    # most significant differing base-3 digit decides: 3 -> 6, 8 -> 2
    assert f2.has_edge(3, 6) and f2.has_edge(8, 2)
    assert f2.has_edge(0, 1) and f2.has_edge(2, 0)
    with pytest.raises(ValueError):
        f_r(0)
    with pytest.raises(ValueError):
        f_r(7)


def test_blow_up():
    base = rotational(3, [1])
    g, parts = blow_up(base, 2)
    assert g.n == 6 and parts.index_vector(range(6)) == (2, 2, 2)
    assert g.min_semi_degree() == 2
    # no edges inside a class, base orientation across classes
    assert g.orientation(0, 1) is Orientation.NONE
    assert g.has_edge(0, 2) and g.has_edge(4, 0)
    with pytest.raises(ValueError):
        blow_up(base, 0)
    with pytest.raises(ValueError):
        blow_up(base, 400)


def test_semi_regular_tournament():
    for m in (3, 4, 5, 6, 9, 10):
        g = semi_regular_tournament(m)
        assert g.n == m
        assert g.classify().is_semi_regular, m


def test_t_sk():
    w = t_sk(2, 1)
    q = 4
    assert w.graph.n == 3 * q
    assert w.partition.index_vector(range(12)) == (q - 1, q, q + 1)
    assert w.graph.classify().is_semi_regular
    assert set(w.graph.score_multiset()) <= {3 * q // 2 - 1, 3 * q // 2}
    assert len(w.reverse_edges) == q
    for u, v in w.reverse_edges:
        assert w.graph.has_edge(u, v)
    with pytest.raises(ValueError):
        t_sk(3, 0)
    with pytest.raises(ValueError):
        t_sk(1, 1)


def test_c3_barrier():
    for n in (2, 3, 4, 5):
        g, parts = c3_barrier(n)
        assert g.n == 3 * n
        assert sorted(len(p) for p in parts.parts) == [n - 1, n, n + 1]
        assert g.min_semi_degree() == (3 * n - 3) // 2
    with pytest.raises(ValueError):
        c3_barrier(0)
