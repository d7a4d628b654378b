"""Enumeration and sampling of tournaments, plus evidence probes.

Canonical forms make isomorphism decidable by string comparison: the
canonical form of a graph is the lexicographically least serialization
of its adjacency over all vertex relabellings.  Serialization order is
the staircase one, vertex k contributing the bit pairs (p_i -> p_k,
p_k -> p_i) for i < k, which lets the minimization run as a
branch-and-bound over partial relabellings; a plain full-permutation
twin is kept alongside as a cross-check oracle.

Regular tournaments are enumerated by orienting the upper-triangle pairs
in lexicographic order under running out-degree bounds, deduplicating
leaves up to isomorphism, and returning canonical representatives in
sorted order.  Random semi-regular tournaments come from a reversal
walk: starting from the deterministic semi-regular tournament, repeatedly
pick a directed triangle and reverse it (this preserves every degree),
emitting the state after a fixed number of accepted moves.  The walk is
assumed, not proven, to mix well; probes that use it are labelled as
sampled evidence.
"""

from __future__ import annotations

import random
from itertools import permutations

from .core import OrientedGraph, serialize
from .embed import find_embedding
from .errors import BudgetExceededError
from .generators import semi_regular_tournament
from .tiling import FOUND, perfect_tiling


def _staircase_chunks(rows, perm):
    """Adjacency chunks of the relabelled graph, one chunk per vertex >= 1."""
    chunks = []
    for k in range(1, len(perm)):
        pk = perm[k]
        chunk = 0
        rk = rows[pk]
        for i in range(k):
            pi = perm[i]
            chunk = chunk << 2 | (rows[pi] >> pk & 1) << 1 | rk >> pi & 1
        chunks.append(chunk)
    return chunks


def _chunks_to_int(n, chunks):
    value = 0
    for k, chunk in enumerate(chunks, start=1):
        value = value << (2 * k) | chunk
    return value


def canonical_form(graph):
    """(n, bits): least staircase serialization over all relabellings."""
    _, form = _canonical_perm_and_form(graph)
    return form


def canonical_graph(graph):
    """The canonical representative: the graph relabelled by a minimizing
    permutation, so isomorphic graphs map to equal graphs."""
    perm, _ = _canonical_perm_and_form(graph)
    # perm[k] = original vertex placed at position k
    inverse = [0] * graph.n
    for spot, v in enumerate(perm):
        inverse[v] = spot
    edges = [(inverse[u], inverse[v]) for u, v in graph.edges()]
    return OrientedGraph(graph.n, edges)


def _canonical_perm_and_form(graph):
    """Branch and bound over partial relabellings.

    A frame is "tight" when its chunk prefix equals the current best's
    prefix; only then can a child chunk greater than the best's next chunk
    be pruned.  Any best found inside a subtree shares that subtree's
    prefix, so tightness stays valid as the best improves.
    """
    n = graph.n
    if n == 0:
        return (), (0, 0)
    rows = graph.out_rows
    best_chunks = None
    best_perm = None

    def extend(perm, used, chunks, tight):
        nonlocal best_chunks, best_perm
        k = len(perm)
        if k == n:
            if best_chunks is None or chunks < best_chunks:
                best_chunks = list(chunks)
                best_perm = list(perm)
            return
        for v in range(n):
            if used >> v & 1:
                continue
            if k == 0:
                perm.append(v)
                extend(perm, used | 1 << v, chunks, True)
                perm.pop()
                continue
            chunk = 0
            rv = rows[v]
            for i in range(k):
                pi = perm[i]
                chunk = chunk << 2 | (rows[pi] >> v & 1) << 1 | rv >> pi & 1
            if best_chunks is not None and tight:
                ref = best_chunks[k - 1]
                if chunk > ref:
                    continue
                child_tight = chunk == ref
            else:
                child_tight = best_chunks is None
            perm.append(v)
            chunks.append(chunk)
            extend(perm, used | 1 << v, chunks, child_tight)
            perm.pop()
            chunks.pop()

    extend([], 0, [], True)
    return tuple(best_perm), (n, _chunks_to_int(n, best_chunks))


def canonical_form_bruteforce(graph):
    """Full-permutation twin of canonical_form, used as a cross-check."""
    n = graph.n
    if n == 0:
        return (0, 0)
    rows = graph.out_rows
    best = None
    for perm in permutations(range(n)):
        chunks = _staircase_chunks(rows, perm)
        if best is None or chunks < best:
            best = chunks
    return (n, _chunks_to_int(n, best))


def _iso_invariant(graph):
    tri = sorted(
        sum(
            (graph.out_rows[u] & graph.in_rows[v]).bit_count()
            for u in graph.out_neighbors(v)
        )
        for v in range(graph.n)
    )
    return (graph.edge_count, tuple(graph.score_multiset()), tuple(tri))


def _isomorphic_tournaments(a, b):
    # equal-order tournaments: any embedding is onto and hence an isomorphism
    return find_embedding(a, b) is not None


def enumerate_regular_tournaments(n):
    """All regular tournaments on n vertices up to isomorphism, as canonical
    representatives in deterministic order.  n must be odd and at most 9."""
    if n < 1 or n % 2 == 0:
        raise ValueError("regular tournaments need odd n")
    if n > 9:
        raise ValueError("enumeration is capped at n = 9")
    target = (n - 1) // 2
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    out = [0] * n
    undecided = [n - 1] * n  # pairs not yet oriented per vertex
    orient = [None] * len(pairs)
    classes = {}  # cheap invariant -> list of representatives

    def place(idx):
        if idx == len(pairs):
            g = OrientedGraph(n, orient)
            key = _iso_invariant(g)
            bucket = classes.setdefault(key, [])
            if not any(_isomorphic_tournaments(g, h) for h in bucket):
                bucket.append(g)
            return
        i, j = pairs[idx]
        undecided[i] -= 1
        undecided[j] -= 1
        for winner, loser in ((i, j), (j, i)):
            if out[winner] < target and out[loser] + undecided[loser] >= target:
                orient[idx] = (winner, loser)
                out[winner] += 1
                place(idx + 1)
                out[winner] -= 1
        undecided[i] += 1
        undecided[j] += 1

    place(0)
    reps = [canonical_graph(g) for bucket in classes.values() for g in bucket]
    reps.sort(key=canonical_form)
    return reps


def labeled_regular_tournament_count(n):
    """Independent oracle: count labeled regular tournaments and their
    isomorphism classes by bucketing every labeled tournament (generated by
    a straightforward recursion over pairs) on its canonical form."""
    if n < 1 or n % 2 == 0:
        raise ValueError("regular tournaments need odd n")
    target = (n - 1) // 2
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    total = len(pairs)
    # tail[idx][v] = number of pairs at positions >= idx that contain v
    tail = [[0] * n for _ in range(total + 1)]
    for idx in range(total - 1, -1, -1):
        i, j = pairs[idx]
        for v in range(n):
            tail[idx][v] = tail[idx + 1][v] + (1 if v in (i, j) else 0)
    forms = set()
    labeled = 0
    out = [0] * n
    chosen = []

    def rec(idx):
        nonlocal labeled
        if idx == total:
            labeled += 1
            forms.add(canonical_form(OrientedGraph(n, chosen)))
            return
        i, j = pairs[idx]
        for winner, loser in ((i, j), (j, i)):
            if out[winner] + 1 > target:
                continue
            if out[loser] + tail[idx + 1][loser] < target:
                continue
            out[winner] += 1
            chosen.append((winner, loser))
            rec(idx + 1)
            chosen.pop()
            out[winner] -= 1

    rec(0)
    return labeled, len(forms)


def random_semi_regular(n, seed=0, moves_per_pair=50):
    """Random semi-regular tournament from a seeded reversal walk.

    Starts at the deterministic semi-regular tournament on n vertices and
    applies moves_per_pair * n^2 accepted directed-triangle reversals;
    each reversal preserves all out- and in-degrees.
    """
    if n < 3:
        raise ValueError("need at least 3 vertices")
    start = semi_regular_tournament(n)
    rows = list(start.out_rows)
    rng = random.Random(f"walk:{n}:{seed}")
    rand = rng.random
    accepted = 0
    needed = moves_per_pair * n * n
    while accepted < needed:
        u = int(rand() * n)
        v = int(rand() * n)
        w = int(rand() * n)
        if u == v or u == w or v == w:
            continue
        # accept orientation u -> v -> w -> u
        if rows[u] >> v & 1 and rows[v] >> w & 1 and rows[w] >> u & 1:
            rows[u] = rows[u] ^ 1 << v
            rows[v] = rows[v] ^ 1 << w
            rows[w] = rows[w] ^ 1 << u
            rows[v] |= 1 << u
            rows[w] |= 1 << v
            rows[u] |= 1 << w
            accepted += 1
    return OrientedGraph.from_out_rows(n, rows)


def turanability_probe(pattern, sizes, mode="exhaustive", samples=100, seed=0, budget=None):
    """Evidence report: which tournaments of the given sizes contain the pattern.

    mode "exhaustive" runs over every regular-tournament class (odd n <= 9);
    mode "sample" draws seeded semi-regular tournaments.  Findings are finite
    evidence only; nothing is claimed beyond the sizes listed.
    """
    if mode not in ("exhaustive", "sample"):
        raise ValueError(f"unknown mode {mode!r}")
    per_n = []
    for n in sizes:
        if mode == "exhaustive":
            population = enumerate_regular_tournaments(n)
            tags = [f"class-{i}" for i in range(len(population))]
        else:
            population = [random_semi_regular(n, seed=f"{seed}:{i}") for i in range(samples)]
            tags = [f"sample-{i}" for i in range(samples)]
        misses = []
        gave_up = []
        for tag, g in zip(tags, population):
            try:
                if find_embedding(pattern, g, budget=budget) is None:
                    misses.append({"tag": tag, "graph": serialize(g)})
            except BudgetExceededError:
                gave_up.append(tag)
        entry = {
            "n": n,
            "population": len(population),
            "containing": len(population) - len(misses) - len(gave_up),
            "misses": misses,
        }
        if gave_up:
            entry["inconclusive"] = gave_up
        per_n.append(entry)
    return {
        "pattern": serialize(pattern),
        "mode": mode,
        "seed": seed,
        "note": "finite evidence only, no claim beyond the sizes listed",
        "per_n": per_n,
    }


def tileability_probe(pattern, sizes, samples=20, seed=0, extra_hosts=(), budget=None):
    """Evidence report: fraction of sampled semi-regular tournaments with a
    perfect tiling by the pattern.  Sizes not divisible by the pattern
    order are reported as skipped.  extra_hosts entries are (label, graph,
    partition-or-None) triples whose tiling verdicts join the report."""
    per_n = []
    for n in sizes:
        if n % pattern.n:
            per_n.append({"n": n, "skipped": "pattern order does not divide n"})
            continue
        outcomes = []
        tiled = 0
        for i in range(samples):
            host = random_semi_regular(n, seed=f"{seed}:{i}")
            result = perfect_tiling(pattern, host, budget=budget)
            if result.mode == FOUND:
                tiled += 1
                outcomes.append(
                    {"tag": f"sample-{i}", "mode": result.mode,
                     "copies": [list(c) for c in result.tiling.copies]}
                )
            else:
                outcomes.append({"tag": f"sample-{i}", "mode": result.mode})
        per_n.append({"n": n, "samples": samples, "tiled": tiled, "outcomes": outcomes})
    injected = []
    for label, host, partition in extra_hosts:
        result = perfect_tiling(pattern, host, partition=partition, budget=budget)
        entry = {"label": label, "mode": result.mode}
        if result.note:
            entry["note"] = result.note
        injected.append(entry)
    report = {
        "pattern": serialize(pattern),
        "seed": seed,
        "note": "finite evidence only, no claim beyond the sizes listed",
        "per_n": per_n,
    }
    if injected:
        report["injected"] = injected
    return report
