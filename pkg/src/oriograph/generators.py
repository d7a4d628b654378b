"""Constructions of named oriented graphs and tournaments.

Most of these revolve around a directed triangle of vertex classes: the
triangle blow-up d_abc places transitive tournaments of sizes a, b, c on
three parts with all cross edges running part 1 -> part 2 -> part 3 ->
part 1.  The barrier constructions t_sk and c3_barrier keep that cyclic
cross pattern but make the parts slightly unbalanced, which blocks
perfect tilings by divisibility while keeping the minimum semi-degree as
large as possible.

Semi-regular internal tournaments are built deterministically: an odd
part uses the rotational tournament on residues 1..(m-1)/2, an even part
uses the half circulant (residues 1..m/2-1 plus the diameter pairs
oriented low index -> high index), whose highest out-degree vertices are
exactly the first m/2 positions.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import MAX_VERTICES, OrientedGraph, Partition


def transitive(n):
    """Transitive tournament: i -> j iff i < j."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return OrientedGraph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def cycle_power(k, length):
    """C_k^l on vertices 0..k-1: i -> j iff (j - i) mod k is in 1..l."""
    if k < 3:
        raise ValueError("cycle power needs k >= 3")
    if not 1 <= length <= (k - 1) // 2:
        raise ValueError(f"need 1 <= l <= (k-1)//2, got l={length} for k={k}")
    return rotational(k, range(1, length + 1), _allow_even=True)


def rotational(n, residues, _allow_even=False):
    """i -> j iff (j - i) mod n lies in the residue set.

    The residue set may not contain a residue together with its negation,
    otherwise some pair would be oriented both ways.
    """
    res = sorted(set(residues))
    if not _allow_even and n % 2 == 0:
        raise ValueError("rotational construction needs odd n")
    for r in res:
        if not 1 <= r <= n - 1:
            raise ValueError(f"residue {r} out of range 1..{n - 1}")
        if (n - r) % n in res:
            raise ValueError(f"residues {r} and {n - r} would orient a pair both ways")
    rows = []
    base = 0
    for r in res:
        base |= 1 << r
    wrap = (1 << n) - 1
    for i in range(n):
        row = (base << i) & wrap | base >> (n - i)
        rows.append(row)
    return OrientedGraph.from_out_rows(n, rows)


def graph_s():
    """The 5-vertex, 8-edge oriented graph S; pairs {0,4} and {3,4} stay unoriented."""
    return OrientedGraph(
        5, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3), (2, 4), (3, 0), (4, 1)]
    )


def d_abc(a, b, c):
    """Triangle blow-up with transitive parts of sizes a, b, c.

    Cross edges run part 1 -> part 2 -> part 3 -> part 1; inside each part
    vertices are ordered transitively.  Returns (graph, partition).
    d_abc(s, s, s) is a tournament on 3s vertices; d_abc(1, 1, 2) is the
    unique strongly connected tournament on 4 vertices.
    """
    sizes = (a, b, c)
    if min(sizes) < 1:
        raise ValueError("part sizes must be positive")
    bounds = _offsets(sizes)
    edges = []
    for p in range(3):
        lo, hi = bounds[p], bounds[p + 1]
        edges.extend((i, j) for i in range(lo, hi) for j in range(i + 1, hi))
        nlo, nhi = bounds[(p + 1) % 3], bounds[(p + 1) % 3 + 1]
        edges.extend((i, j) for i in range(lo, hi) for j in range(nlo, nhi))
    parts = [range(bounds[p], bounds[p + 1]) for p in range(3)]
    return OrientedGraph(sum(sizes), edges), Partition(parts)


def f_r(r):
    """Recursive triangle tower: f_r(1) is the directed triangle, and level
    r+1 takes three copies of level r with cross edges copy 1 -> copy 2 ->
    copy 3 -> copy 1.  A regular tournament on 3^r vertices.

    Vertex i -> vertex j iff at the most significant base-3 digit where i
    and j differ, the digit of j is the digit of i plus one mod 3.
    """
    if r < 1:
        raise ValueError("level must be at least 1")
    n = 3**r
    if n > MAX_VERTICES:
        raise ValueError(f"3^{r} = {n} exceeds the {MAX_VERTICES}-vertex cap")
    edges = []
    for i in range(n):
        for j in range(i + 1, n):
            di, dj = i, j
            power = n // 3
            while di // power == dj // power:
                di %= power
                dj %= power
                power //= 3
            if (dj // power - di // power) % 3 == 1:
                edges.append((i, j))
            else:
                edges.append((j, i))
    return OrientedGraph(n, edges)


def blow_up(base, t):
    """Replace each vertex of base by an independent set of t vertices; all
    edges between two classes follow the base orientation.  Returns
    (graph, partition) with one part per base vertex.
    """
    if t < 1:
        raise ValueError("class size must be positive")
    n = base.n * t
    if n > MAX_VERTICES:
        raise ValueError(f"{base.n} * {t} = {n} exceeds the {MAX_VERTICES}-vertex cap")
    edges = [
        (i * t + p, j * t + q)
        for i, j in base.edges()
        for p in range(t)
        for q in range(t)
    ]
    parts = [range(i * t, (i + 1) * t) for i in range(base.n)]
    return OrientedGraph(n, edges), Partition(parts)


def semi_regular_tournament(m):
    """Deterministic semi-regular tournament on m vertices.

    Odd m: rotational with residues 1..(m-1)/2.  Even m: residues
    1..m/2-1 plus the m/2 diameter pairs oriented low -> high, so the
    vertices of highest out-degree are exactly 0..m/2-1.
    """
    if m < 0:
        raise ValueError("m must be nonnegative")
    if m <= 1:
        return OrientedGraph(m)
    if m % 2:
        return rotational(m, range(1, (m - 1) // 2 + 1))
    edges = [
        (i, (i + r) % m) for i in range(m) for r in range(1, m // 2)
    ]
    edges.extend((i, i + m // 2) for i in range(m // 2))
    return OrientedGraph(m, edges)


@dataclass(frozen=True)
class TskWitness:
    """t_sk output: the tournament, its part structure, and the two reversed
    matchings as directed edges (the only edges running against the cyclic
    cross pattern)."""

    graph: OrientedGraph
    partition: Partition
    reverse_edges: frozenset


def t_sk(s, k):
    """Semi-regular tournament on 3s(k+1) vertices with no perfect tiling by
    the triangle blow-up on 3s vertices.

    Writing q = s(k+1) (required even), the parts have sizes q-1, q, q+1
    and carry semi-regular internal tournaments; cross edges run part 1 ->
    part 2 -> part 3 -> part 1 except for two reversed matchings of size
    q/2: one from part 3 back onto the highest out-degree vertices of part
    2, one from the first q/2 vertices of part 1 onto the same q/2
    vertices of part 3.  Every out-degree lands in {3q/2 - 1, 3q/2}.
    """
    if s < 2:
        raise ValueError("s must be at least 2")
    if k < 0:
        raise ValueError("k must be nonnegative")
    q = s * (k + 1)
    if q % 2:
        raise ValueError(f"s(k+1) = {q} must be even")
    if 3 * q > MAX_VERTICES:
        raise ValueError(f"3s(k+1) = {3 * q} exceeds the {MAX_VERTICES}-vertex cap")
    sizes = (q - 1, q, q + 1)
    bounds = _offsets(sizes)
    edges = []
    for p in range(3):
        part = semi_regular_tournament(sizes[p])
        off = bounds[p]
        edges.extend((off + u, off + v) for u, v in part.edges())
    o1, o2, o3 = bounds[0], bounds[1], bounds[2]
    half = q // 2
    m1 = {(o3 + j, o2 + j) for j in range(half)}
    m2 = {(o1 + j, o3 + j) for j in range(half)}
    edges.extend((u, v) for u in range(o1, o2) for v in range(o2, o3))
    for u in range(o2, o3):
        for v in range(o3, o3 + q + 1):
            if (v, u) in m1:
                edges.append((v, u))
            else:
                edges.append((u, v))
    for u in range(o3, o3 + q + 1):
        for v in range(o1, o2):
            if (v, u) in m2:
                edges.append((v, u))
            else:
                edges.append((u, v))
    parts = [range(bounds[p], bounds[p + 1]) for p in range(3)]
    return TskWitness(
        graph=OrientedGraph(3 * q, edges),
        partition=Partition(parts),
        reverse_edges=frozenset(m1 | m2),
    )


def c3_barrier(n):
    """Tournament on 3n vertices with parts of sizes n-1, n, n+1, cross edges
    part 1 -> part 2 -> part 3 -> part 1, and semi-regular internal
    tournaments.  No perfect tiling by directed triangles exists because
    every triangle meets the parts in counts (3,0,0)-type or (1,1,1), all
    equal modulo 3, while the part sizes are not.  Returns (graph,
    partition).
    """
    if n < 1:
        raise ValueError("n must be positive")
    if 3 * n > MAX_VERTICES:
        raise ValueError(f"3n = {3 * n} exceeds the {MAX_VERTICES}-vertex cap")
    sizes = (n - 1, n, n + 1)
    bounds = _offsets(sizes)
    edges = []
    for p in range(3):
        part = semi_regular_tournament(sizes[p])
        off = bounds[p]
        edges.extend((off + u, off + v) for u, v in part.edges())
        nlo, nhi = bounds[(p + 1) % 3], bounds[(p + 1) % 3 + 1]
        for u in range(bounds[p], bounds[p + 1]):
            edges.extend((u, v) for v in range(nlo, nhi))
    parts = [range(bounds[p], bounds[p + 1]) for p in range(3)]
    return OrientedGraph(3 * n, edges), Partition(parts)


def _offsets(sizes):
    bounds = [0]
    for s in sizes:
        bounds.append(bounds[-1] + s)
    return bounds
