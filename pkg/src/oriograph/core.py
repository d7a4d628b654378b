"""Oriented graphs with bit-row adjacency.

An oriented graph is a directed graph with no loops and at most one edge
per vertex pair; a tournament orients every pair.  Adjacency is stored as
one Python int per vertex whose set bits are the out-neighbours, so
neighbourhood intersections and degree counts are single bitwise
operations.  Graphs are immutable once built and therefore safe to share
across threads.

The module also defines vertex partitions with their index vectors
(i_P(U) counts how many vertices of U fall in each part), injective
edge-preserving embeddings, and the plain-text .dg / .parts file formats
used by the command line tools.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import combinations

from .errors import ParseError

# Constructions that can blow up in size refuse to go past this many vertices.
MAX_VERTICES = 1024


class Orientation(enum.Enum):
    NONE = 0
    FORWARD = 1
    BACKWARD = 2


def bits(mask):
    """Yield the set bit positions of mask in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class OrientedGraph:
    """Immutable oriented graph on vertices 0..n-1."""

    __slots__ = ("n", "out_rows", "in_rows", "edge_count")

    def __init__(self, n, edges=()):
        if n < 0:
            raise ValueError(f"vertex count must be nonnegative, got {n}")
        out = [0] * n
        inr = [0] * n
        m = 0
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if out[u] >> v & 1:
                raise ValueError(f"duplicate edge ({u}, {v})")
            if out[v] >> u & 1:
                raise ValueError(f"conflicting orientation for pair ({v}, {u})")
            out[u] |= 1 << v
            inr[v] |= 1 << u
            m += 1
        self.n = n
        self.out_rows = tuple(out)
        self.in_rows = tuple(inr)
        self.edge_count = m

    @classmethod
    def from_out_rows(cls, n, rows):
        """Build from per-vertex out-neighbour masks, validating antisymmetry."""
        g = object.__new__(cls)
        if len(rows) != n:
            raise ValueError("row count does not match n")
        inr = [0] * n
        m = 0
        full = (1 << n) - 1
        for u, row in enumerate(rows):
            if row & ~full:
                raise ValueError(f"row {u} has bits outside 0..{n - 1}")
            if row >> u & 1:
                raise ValueError(f"loop at vertex {u}")
            m += row.bit_count()
            for v in bits(row):
                inr[v] |= 1 << u
        for u in range(n):
            if rows[u] & inr[u]:
                raise ValueError(f"conflicting orientations at vertex {u}")
        g.n = n
        g.out_rows = tuple(rows)
        g.in_rows = tuple(inr)
        g.edge_count = m
        return g

    def orientation(self, u, v):
        """Orientation of the pair {u, v}: FORWARD if u->v, BACKWARD if v->u."""
        self._check_vertex(u)
        self._check_vertex(v)
        if u == v:
            raise ValueError(f"pair ({u}, {v}) is not a pair of distinct vertices")
        if self.out_rows[u] >> v & 1:
            return Orientation.FORWARD
        if self.out_rows[v] >> u & 1:
            return Orientation.BACKWARD
        return Orientation.NONE

    def has_edge(self, u, v):
        return self.out_rows[u] >> v & 1 == 1

    def out_degree(self, v):
        self._check_vertex(v)
        return self.out_rows[v].bit_count()

    def in_degree(self, v):
        self._check_vertex(v)
        return self.in_rows[v].bit_count()

    def degrees(self, v):
        """(out-degree, in-degree) of v."""
        return (self.out_degree(v), self.in_degree(v))

    def out_neighbors(self, v):
        return list(bits(self.out_rows[v]))

    def in_neighbors(self, v):
        return list(bits(self.in_rows[v]))

    def edges(self):
        """All edges as (tail, head), sorted."""
        return [(u, v) for u in range(self.n) for v in bits(self.out_rows[u])]

    def is_tournament(self):
        return self.edge_count == self.n * (self.n - 1) // 2

    def min_semi_degree(self):
        """delta^0: the minimum over vertices of min(out-degree, in-degree)."""
        if self.n == 0:
            return 0
        return min(
            min(o.bit_count(), i.bit_count())
            for o, i in zip(self.out_rows, self.in_rows)
        )

    def classify(self):
        tournament = self.is_tournament()
        d0 = self.min_semi_degree()
        semi_regular = tournament and d0 == (self.n - 1) // 2 if self.n else tournament
        return Classification(
            is_tournament=tournament,
            min_semi_degree=d0,
            is_semi_regular=semi_regular,
            is_regular=semi_regular and self.n % 2 == 1,
        )

    def induced(self, vertices):
        """Subgraph induced on the given vertex set, relabelled in ascending order."""
        sub = sorted(set(vertices))
        for v in sub:
            self._check_vertex(v)
        pos = {v: i for i, v in enumerate(sub)}
        edges = [
            (pos[u], pos[v])
            for u in sub
            for v in bits(self.out_rows[u])
            if v in pos
        ]
        return OrientedGraph(len(sub), edges)

    def score_multiset(self):
        """Sorted tuple of out-degrees."""
        return tuple(sorted(r.bit_count() for r in self.out_rows))

    def _check_vertex(self, v):
        if not (0 <= v < self.n):
            raise ValueError(f"vertex {v} out of range for n={self.n}")

    def __eq__(self, other):
        return (
            isinstance(other, OrientedGraph)
            and self.n == other.n
            and self.out_rows == other.out_rows
        )

    def __hash__(self):
        return hash((self.n, self.out_rows))

    def __repr__(self):
        return f"OrientedGraph(n={self.n}, m={self.edge_count})"


@dataclass(frozen=True)
class Classification:
    is_tournament: bool
    min_semi_degree: int
    is_semi_regular: bool
    is_regular: bool


class Partition:
    """Ordered partition of a vertex set into d pairwise disjoint parts."""

    __slots__ = ("parts", "masks", "ground_mask", "_label")

    def __init__(self, parts):
        pts = tuple(frozenset(p) for p in parts)
        if not pts:
            raise ValueError("a partition needs at least one part")
        masks = []
        ground = 0
        label = {}
        for i, part in enumerate(pts):
            mask = 0
            for v in part:
                if v < 0:
                    raise ValueError(f"negative vertex {v}")
                if ground >> v & 1:
                    raise ValueError(f"vertex {v} appears in two parts")
                mask |= 1 << v
                label[v] = i
            masks.append(mask)
            ground |= mask
        self.parts = pts
        self.masks = tuple(masks)
        self.ground_mask = ground
        self._label = label

    @property
    def d(self):
        return len(self.parts)

    @property
    def ground_set(self):
        return frozenset(self._label)

    def part_of(self, v):
        try:
            return self._label[v]
        except KeyError:
            raise ValueError(f"vertex {v} is not covered by the partition") from None

    def index_vector(self, vertices):
        """i_P(U): per-part counts of the vertices of U."""
        counts = [0] * self.d
        for v in set(vertices):
            counts[self.part_of(v)] += 1
        return tuple(counts)

    def index_vector_of_mask(self, mask):
        if mask & ~self.ground_mask:
            raise ValueError("vertex set is not covered by the partition")
        return tuple((mask & pm).bit_count() for pm in self.masks)

    def covers(self, graph):
        return self.ground_mask == (1 << graph.n) - 1

    def __eq__(self, other):
        return isinstance(other, Partition) and self.parts == other.parts

    def __hash__(self):
        return hash(self.parts)

    def __repr__(self):
        return f"Partition(sizes={tuple(len(p) for p in self.parts)})"


def index_vector(partition, vertices):
    return partition.index_vector(vertices)


@dataclass(frozen=True)
class Embedding:
    """Injective map pattern -> host sending every pattern edge to a host edge."""

    pattern: OrientedGraph
    host: OrientedGraph
    mapping: tuple

    def image(self):
        return frozenset(self.mapping)

    def image_mask(self):
        mask = 0
        for v in self.mapping:
            mask |= 1 << v
        return mask

    def verify(self):
        phi = self.mapping
        if len(phi) != self.pattern.n or len(set(phi)) != len(phi):
            return False
        return all(
            self.host.has_edge(phi[u], phi[v]) for u, v in self.pattern.edges()
        )

    def index_vector(self, partition):
        return partition.index_vector(self.mapping)


# --- .dg file format -------------------------------------------------------
#
# Line 1 is "n m"; the next m lines are "u v" for the edge u->v, vertices
# 0-indexed.  '#' starts a comment anywhere on a line.  The canonical
# serialization lists edges sorted by (tail, head).


def _strip(line):
    cut = line.find("#")
    if cut >= 0:
        line = line[:cut]
    return line.strip()


def parse(text):
    """Parse .dg text into an OrientedGraph, reporting errors by line number."""
    rows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = _strip(raw)
        if body:
            rows.append((lineno, body))
    if not rows:
        raise ParseError(1, "missing header line 'n m'")
    lineno, header = rows[0]
    fields = header.split()
    if len(fields) != 2:
        raise ParseError(lineno, f"header must be 'n m', got {header!r}")
    try:
        n, m = int(fields[0]), int(fields[1])
    except ValueError:
        raise ParseError(lineno, f"header must be two integers, got {header!r}") from None
    if n < 0 or m < 0:
        raise ParseError(lineno, "n and m must be nonnegative")
    body_rows = rows[1:]
    if len(body_rows) != m:
        raise ParseError(lineno, f"header announces {m} edges, file has {len(body_rows)}")
    out = [0] * n
    edges = []
    for lineno, body in body_rows:
        fields = body.split()
        if len(fields) != 2:
            raise ParseError(lineno, f"edge line must be 'u v', got {body!r}")
        try:
            u, v = int(fields[0]), int(fields[1])
        except ValueError:
            raise ParseError(lineno, f"edge line must be two integers, got {body!r}") from None
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(lineno, f"vertex out of range in edge ({u}, {v}), n={n}")
        if u == v:
            raise ParseError(lineno, f"loop at vertex {u}")
        if out[u] >> v & 1:
            raise ParseError(lineno, f"duplicate edge ({u}, {v})")
        if out[v] >> u & 1:
            raise ParseError(lineno, f"conflicting orientation for pair ({u}, {v})")
        out[u] |= 1 << v
        edges.append((u, v))
    return OrientedGraph(n, edges)


def serialize(graph):
    """Canonical .dg text: header then edges sorted by (tail, head)."""
    lines = [f"{graph.n} {graph.edge_count}"]
    lines.extend(f"{u} {v}" for u, v in graph.edges())
    return "\n".join(lines) + "\n"


def parse_partition(text):
    """Parse .parts text: one line per part, space-separated vertex ids."""
    parts = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = _strip(raw)
        if not body:
            continue
        try:
            part = [int(f) for f in body.split()]
        except ValueError:
            raise ParseError(lineno, f"part line must be integers, got {body!r}") from None
        if len(set(part)) != len(part):
            raise ParseError(lineno, "repeated vertex inside a part")
        parts.append(part)
    if not parts:
        raise ParseError(1, "partition file has no parts")
    try:
        return Partition(parts)
    except ValueError as exc:
        raise ParseError(1, str(exc)) from None


def serialize_partition(partition):
    return "\n".join(" ".join(str(v) for v in sorted(p)) for p in partition.parts) + "\n"


def read_graph(path):
    with open(path, "r", encoding="utf-8") as fh:
        return parse(fh.read())


def write_graph(path, graph):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(serialize(graph))


def read_partition(path):
    with open(path, "r", encoding="utf-8") as fh:
        return parse_partition(fh.read())


def write_partition(path, partition):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(serialize_partition(partition))


def isomorphic_brute(a, b):
    """Permutation-check isomorphism for small graphs (test oracle helper)."""
    from itertools import permutations

    if a.n != b.n or a.edge_count != b.edge_count:
        return False
    if sorted(a.score_multiset()) != sorted(b.score_multiset()):
        return False
    av = list(range(a.n))
    for perm in permutations(range(b.n)):
        if all(
            a.has_edge(u, v) == b.has_edge(perm[u], perm[v])
            for u, v in combinations(av, 2)
        ) and all(
            a.has_edge(v, u) == b.has_edge(perm[v], perm[u])
            for u, v in combinations(av, 2)
        ):
            return True
    return False
