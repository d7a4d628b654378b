"""Vertex statistics, their windows, and the extremal-structure checker."""

from fractions import Fraction
from itertools import product

from oriograph.core import OrientedGraph, Partition
from oriograph.analysis import (
    cyclic_edge_stat,
    cyclic_edge_window,
    d_copies_floor,
    d_copies_through,
    d_copy_counts,
    extremal_check,
    find_extremal_partition,
    semi_degree_slack,
)
from oriograph.generators import d_abc, rotational
from oriograph.search import random_semi_regular


def brute_cyclic_edges(graph, v):
    outs = graph.out_neighbors(v)
    ins = set(graph.in_neighbors(v))
    return sum(1 for u in outs for w in graph.out_neighbors(u) if w in ins)


def brute_d_copies(graph, v):
    from itertools import combinations

    count = 0
    others = [u for u in range(graph.n) if u != v]
    for trio in combinations(others, 3):
        sub = graph.induced((v, *trio))
        if sub.is_tournament() and sub.score_multiset() == (1, 1, 2, 2):
            count += 1
    return count


def test_known_statistic_values():
    c52 = rotational(5, [1, 2])
    t7 = rotational(7, [1, 2, 4])
    for v in range(5):
        assert cyclic_edge_stat(c52, v) == 3
        assert d_copies_through(c52, v) == 4
    for v in range(7):
        assert cyclic_edge_stat(t7, v) == 6
        assert d_copies_through(t7, v) == 12
    assert tuple(d_copy_counts(t7)) == (12,) * 7


def test_statistics_match_brute_force():
    for n in (8, 11):
        g = random_semi_regular(n, seed="stats")
        counts = d_copy_counts(g)
        for v in range(n):
            assert cyclic_edge_stat(g, v) == brute_cyclic_edges(g, v)
            assert d_copies_through(g, v) == brute_d_copies(g, v)
            assert counts[v] == d_copies_through(g, v)


def test_windows_hold_on_sampled_hosts():
    for i, n in enumerate((9, 12, 15, 20)):
        g = random_semi_regular(n, seed=f"window:{i}")
        assert semi_degree_slack(g) == Fraction(1 if n % 2 else 2, 2 * n)
        lo, hi = cyclic_edge_window(g)
        floor = d_copies_floor(g)
        counts = d_copy_counts(g)
        for v in range(n):
            assert lo <= cyclic_edge_stat(g, v) <= hi
            assert counts[v] >= floor


def test_extremal_check_on_planted_partition():
    host, parts = d_abc(3, 3, 3)
    verdict = extremal_check(host, parts, gamma=0.05)
    assert verdict.ok
    assert verdict.reverse_counts == (0, 0, 0)
    assert verdict.sizes == (3, 3, 3)


def test_extremal_check_tries_all_orders():
    host, parts = d_abc(3, 3, 3)
    # a rotation keeps the cyclic pattern, a swap needs a different order
    swapped = Partition([sorted(parts.parts[1]), sorted(parts.parts[0]), sorted(parts.parts[2])])
    verdict = extremal_check(host, swapped, gamma=0.05)
    assert verdict.ok
    assert verdict.passing_order != (0, 1, 2)
    rotated = Partition([sorted(parts.parts[2]), sorted(parts.parts[0]), sorted(parts.parts[1])])
    assert extremal_check(host, rotated, gamma=0.05).passing_order == (0, 1, 2)


def test_t7_has_no_extremal_partition_exhaustively():
    t7 = rotational(7, [1, 2, 4])
    gamma = 0.05
    for labels in product(range(3), repeat=7):
        parts = [[v for v in range(7) if labels[v] == lab] for lab in range(3)]
        if any(not p for p in parts):
            continue
        assert not extremal_check(t7, Partition(parts), gamma).ok


def test_find_extremal_partition_recovers_plant():
    host, parts = d_abc(4, 4, 4)
    found = find_extremal_partition(host, gamma=0.1, seed=7)
    assert found is not None
    verdict = extremal_check(host, found, gamma=0.1)
    assert verdict.ok
    sizes = sorted(len(p) for p in found.parts)
    assert sizes == [4, 4, 4]


def test_find_extremal_partition_gives_up_on_t7():
    t7 = rotational(7, [1, 2, 4])
    assert find_extremal_partition(t7, gamma=0.05, restarts=5, seed=1) is None
