"""Canonical forms, tournament enumeration, the sampler, and the probes."""

import random
from itertools import combinations

import pytest

from oriograph.core import OrientedGraph, isomorphic_brute
from oriograph.generators import d_abc, f_r, graph_s, rotational
from oriograph.search import (
    canonical_form,
    canonical_form_bruteforce,
    canonical_graph,
    enumerate_regular_tournaments,
    labeled_regular_tournament_count,
    random_semi_regular,
    tileability_probe,
    turanability_probe,
)


def random_oriented(rng, n):
    edges = []
    for i, j in combinations(range(n), 2):
        r = rng.random()
        if r < 1 / 3:
            edges.append((i, j))
        elif r < 2 / 3:
            edges.append((j, i))
    return OrientedGraph(n, edges)


def relabel(graph, perm):
    return OrientedGraph(graph.n, [(perm[u], perm[v]) for u, v in graph.edges()])


def test_canonical_form_matches_bruteforce():
    rng = random.Random("canon")
    for trial in range(200):
        g = random_oriented(rng, rng.randrange(1, 7))
        assert canonical_form(g) == canonical_form_bruteforce(g), trial


def test_canonical_form_is_an_isomorphism_invariant():
    rng = random.Random("canon-inv")
    for _ in range(100):
        g = random_oriented(rng, 6)
        perm = list(range(6))
        rng.shuffle(perm)
        h = relabel(g, perm)
        assert canonical_form(g) == canonical_form(h)
        assert isomorphic_brute(canonical_graph(g), g)
    a = rotational(5, [1, 2])
    b = transitive_5 = OrientedGraph(5, [(i, j) for i in range(5) for j in range(i + 1, 5)])
    assert canonical_form(a) != canonical_form(b)


def test_canonical_graph_is_canonical():
    g = graph_s()
    cg = canonical_graph(g)
    assert canonical_form(cg) == canonical_form(g)
    assert canonical_graph(cg) == cg


def test_enumeration_counts():
    expected = {3: 1, 5: 1, 7: 3}
    for n, classes in expected.items():
        reps = enumerate_regular_tournaments(n)
        assert len(reps) == classes
        for g in reps:
            assert g.classify().is_regular
        for a, b in combinations(reps, 2):
            assert not isomorphic_brute(a, b)
    with pytest.raises(ValueError):
        enumerate_regular_tournaments(4)
    with pytest.raises(ValueError):
        enumerate_regular_tournaments(11)


def test_labeled_enumeration_oracle():
    assert labeled_regular_tournament_count(3) == (2, 1)
    assert labeled_regular_tournament_count(5) == (24, 1)
    assert labeled_regular_tournament_count(7) == (2640, 3)


def test_enumeration_is_deterministic():
    a = enumerate_regular_tournaments(7)
    b = enumerate_regular_tournaments(7)
    assert a == b


def test_sampler_properties():
    for n in (7, 8, 12, 15):
        g = random_semi_regular(n, seed=3)
        assert g.n == n
        assert g.classify().is_semi_regular
    assert random_semi_regular(9, seed=5) == random_semi_regular(9, seed=5)
    walks = {random_semi_regular(9, seed=s) for s in range(6)}
    assert len(walks) > 1
    with pytest.raises(ValueError):
        random_semi_regular(2)


def test_turanability_probe_exhaustive():
    report = turanability_probe(graph_s(), sizes=(5, 7))
    assert [e["containing"] for e in report["per_n"]] == [1, 3]
    assert all(not e["misses"] for e in report["per_n"])
    assert "finite evidence" in report["note"]


def test_turanability_probe_records_misses():
    # exactly one of the three regular tournaments on 7 vertices avoids
    # the square of C_6: the rotational one with offsets 1,2,4
    from oriograph.core import parse
    from oriograph.generators import cycle_power

    report = turanability_probe(cycle_power(6, 2), sizes=(7,))
    entry = report["per_n"][0]
    assert entry["population"] == 3
    assert entry["containing"] == 2
    assert len(entry["misses"]) == 1
    miss = parse(entry["misses"][0]["graph"])
    assert isomorphic_brute(miss, rotational(7, [1, 2, 4]))


def test_turanability_probe_sampled():
    report = turanability_probe(graph_s(), sizes=(9, 11), mode="sample", samples=5, seed=2)
    for entry in report["per_n"]:
        assert entry["population"] == 5
        assert entry["containing"] == 5


def test_tileability_probe():
    d, _ = d_abc(1, 1, 2)
    report = tileability_probe(d, sizes=(8, 10), samples=4, seed=1)
    by_n = {e["n"]: e for e in report["per_n"]}
    assert by_n[8]["tiled"] == 4
    assert all(o["mode"] == "found" for o in by_n[8]["outcomes"])
    assert "skipped" in by_n[10]
    w_label = "barrier"
    from oriograph.generators import t_sk

    w = t_sk(2, 0)
    d2, _ = d_abc(2, 2, 2)
    report = tileability_probe(d2, sizes=(), extra_hosts=[(w_label, w.graph, w.partition)])
    assert report["injected"][0]["mode"] == "refuted-lattice"
