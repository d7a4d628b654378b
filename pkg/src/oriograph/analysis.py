"""Vertex statistics and extremal-structure checks for dense hosts.

Two statistics drive the degree arguments for near-semi-regular hosts.
cyclic_edge_stat(G, v) counts edges from the out-neighbourhood of v into
its in-neighbourhood, which is exactly the number of directed triangles
through v.  d_copies_through(G, v) counts 4-sets containing v that
induce the strongly connected 4-vertex tournament (the one with score
multiset {1, 1, 2, 2}).  For a host on n vertices write c for
1/2 - delta^0/n; the statistics should land in [ (1/8 - 2c) n^2,
(1/8 + 2c) n^2 ] and above (1/32 - 2c) n^3 respectively, and the
bounds helpers below report those per-instance windows.

A 3-partition is gamma-extremal when every part has size within
gamma * n of n/3 and each of the three reverse-edge classes (against the
cyclic pattern part 1 -> part 2 -> part 3 -> part 1) has at most
gamma * n^2 edges.  The cyclic pattern is only fixed up to relabelling,
so the checker tries all part orders and passes if any works.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, permutations

from .core import Partition, bits


def cyclic_edge_stat(graph, v):
    """Edges from N+(v) to N-(v): the number of directed triangles through v."""
    graph._check_vertex(v)
    inrow = graph.in_rows[v]
    return sum((graph.out_rows[u] & inrow).bit_count() for u in bits(graph.out_rows[v]))


def d_copies_through(graph, v):
    """4-sets containing v inducing the strong 4-vertex tournament."""
    graph._check_vertex(v)
    others = [u for u in range(graph.n) if u != v]
    out = graph.out_rows
    count = 0
    for a, b, c in combinations(others, 3):
        mask = 1 << v | 1 << a | 1 << b | 1 << c
        scores = sorted(
            (
                (out[v] & mask).bit_count(),
                (out[a] & mask).bit_count(),
                (out[b] & mask).bit_count(),
                (out[c] & mask).bit_count(),
            )
        )
        if scores == [1, 1, 2, 2]:
            count += 1
    return count


def d_copy_counts(graph):
    """d_copies_through for every vertex, via one pass over all 4-sets."""
    out = graph.out_rows
    counts = [0] * graph.n
    for a, b, c, d in combinations(range(graph.n), 4):
        mask = 1 << a | 1 << b | 1 << c | 1 << d
        scores = sorted(
            (
                (out[a] & mask).bit_count(),
                (out[b] & mask).bit_count(),
                (out[c] & mask).bit_count(),
                (out[d] & mask).bit_count(),
            )
        )
        if scores == [1, 1, 2, 2]:
            counts[a] += 1
            counts[b] += 1
            counts[c] += 1
            counts[d] += 1
    return counts


def semi_degree_slack(graph):
    """c = 1/2 - delta^0 / n, the host's distance from perfect semi-regularity.

    Exact Fraction, so the windows built from it compare exactly against
    integer statistics even at the boundary.
    """
    if graph.n == 0:
        raise ValueError("slack is undefined on the empty graph")
    return Fraction(1, 2) - Fraction(graph.min_semi_degree(), graph.n)


def cyclic_edge_window(graph):
    """[(1/8 - 2c) n^2, (1/8 + 2c) n^2] for this host."""
    n = graph.n
    c = semi_degree_slack(graph)
    return ((Fraction(1, 8) - 2 * c) * n * n, (Fraction(1, 8) + 2 * c) * n * n)


def d_copies_floor(graph):
    """(1/32 - 2c) n^3 for this host."""
    n = graph.n
    c = semi_degree_slack(graph)
    return (Fraction(1, 32) - 2 * c) * n**3


@dataclass(frozen=True)
class ExtremalVerdict:
    ok: bool
    gamma: float
    sizes: tuple
    reverse_counts: tuple  # counts for the partition as given
    passing_order: tuple | None  # part order that met the bounds, if any


def _reverse_counts(graph, masks):
    """Edge counts against the cyclic pattern for parts given as masks:
    (part1 -> part3, part3 -> part2, part2 -> part1)."""
    pairs = ((0, 2), (2, 1), (1, 0))
    counts = []
    for a, b in pairs:
        total = 0
        for u in bits(masks[a]):
            total += (graph.out_rows[u] & masks[b]).bit_count()
        counts.append(total)
    return tuple(counts)


def extremal_check(graph, partition, gamma):
    """Is the partition gamma-extremal under some ordering of its parts?"""
    if partition.d != 3:
        raise ValueError("extremal structure is defined for 3 parts")
    if not partition.covers(graph):
        raise ValueError("partition does not cover the graph")
    if gamma < 0:
        raise ValueError("gamma must be nonnegative")
    n = graph.n
    sizes = tuple(len(p) for p in partition.parts)
    lo, hi = (1 / 3 - gamma) * n, (1 / 3 + gamma) * n
    given = _reverse_counts(graph, partition.masks)
    passing = None
    if all(lo <= s <= hi for s in sizes):
        for order in permutations(range(3)):
            counts = _reverse_counts(graph, tuple(partition.masks[i] for i in order))
            if all(c <= gamma * n * n for c in counts):
                passing = order
                break
    return ExtremalVerdict(
        ok=passing is not None,
        gamma=gamma,
        sizes=sizes,
        reverse_counts=given,
        passing_order=passing,
    )


def find_extremal_partition(graph, gamma, restarts=30, seed=0):
    """Seeded local search for a gamma-extremal 3-partition.

    Each restart shuffles the vertices into three near-equal parts, then
    runs steepest-descent single-vertex moves minimizing the reverse-edge
    total subject to the size window, and finally checks the result.
    Returns the first passing partition, or None after all restarts.
    """
    n = graph.n
    if n < 3:
        return None
    lo = (1 / 3 - gamma) * n
    hi = (1 / 3 + gamma) * n

    def reverse_total(label_masks):
        return sum(_reverse_counts(graph, label_masks))

    for restart in range(restarts):
        rng = random.Random(f"extremal:{seed}:{restart}")
        vertices = list(range(n))
        rng.shuffle(vertices)
        labels = [0] * n
        for i, v in enumerate(vertices):
            labels[v] = i * 3 // n
        masks = [0, 0, 0]
        for v, lab in enumerate(labels):
            masks[lab] |= 1 << v
        if not all(lo <= m.bit_count() <= hi for m in masks):
            continue
        current = reverse_total(tuple(masks))
        improved = True
        while improved and current > 0:
            improved = False
            best = None
            for v in range(n):
                src = labels[v]
                if (masks[src].bit_count() - 1) < lo:
                    continue
                for dst in range(3):
                    if dst == src or (masks[dst].bit_count() + 1) > hi:
                        continue
                    masks[src] ^= 1 << v
                    masks[dst] ^= 1 << v
                    total = reverse_total(tuple(masks))
                    masks[src] ^= 1 << v
                    masks[dst] ^= 1 << v
                    if total < current and (best is None or total < best[0]):
                        best = (total, v, dst)
            if best is not None:
                total, v, dst = best
                masks[labels[v]] ^= 1 << v
                masks[dst] ^= 1 << v
                labels[v] = dst
                current = total
                improved = True
        parts = [[v for v in range(n) if labels[v] == lab] for lab in range(3)]
        candidate = Partition(parts)
        if extremal_check(graph, candidate, gamma).ok:
            return candidate
    return None
