"""Perfect tilings of a host graph by disjoint induced copies of a pattern.

A perfect tiling by a k-vertex pattern F is a partition of the host
vertex set into blocks each inducing a copy of F.  The copies of F in G
form a k-uniform hypergraph on V(G); a perfect tiling is exactly a
perfect matching of that hypergraph, i.e. an exact cover of V(G) by
hyperedges.

The solver is a bitmask exact-cover search: it always branches on the
uncovered vertex with the fewest remaining options and tries those
options in lexicographic vertex-set order, so runs are deterministic.
Refutations are certified in two distinct ways: "refuted-exhaustive"
means the cover search ran to completion, "refuted-lattice" means the
residue-lattice pre-check (see the lattice module) already proves the
host's index vector unreachable from the copies' index vectors, and
"refuted-divisibility" means |V(F)| does not divide |V(G)|.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import bits
from .errors import BudgetExceededError, ResourceLimitError
from .embed import _mappings, find_embedding

FOUND = "found"
REFUTED_EXHAUSTIVE = "refuted-exhaustive"
REFUTED_LATTICE = "refuted-lattice"
REFUTED_DIVISIBILITY = "refuted-divisibility"
INCONCLUSIVE = "inconclusive"

DEFAULT_EDGE_CAP = 10_000_000


@dataclass(frozen=True)
class CopyHypergraph:
    """k-uniform hypergraph whose hyperedges are the vertex sets inducing a
    copy of the pattern."""

    n: int
    k: int
    edges: tuple

    def degree(self, v):
        return sum(1 for e in self.edges if v in e)

    def min_vertex_degree(self):
        if self.n == 0:
            return 0
        counts = [0] * self.n
        for e in self.edges:
            for v in e:
                counts[v] += 1
        return min(counts)


@dataclass(frozen=True)
class Tiling:
    copies: tuple

    @property
    def covered(self):
        return frozenset(v for copy in self.copies for v in copy)

    def is_perfect(self, host):
        return len(self.covered) == host.n and sum(len(c) for c in self.copies) == host.n


@dataclass(frozen=True)
class TilingResult:
    mode: str
    tiling: Tiling | None = None
    note: str | None = None


def copy_hypergraph(pattern, host, edge_cap=DEFAULT_EDGE_CAP, budget=None):
    """Enumerate all vertex sets of the host inducing a copy of the pattern.

    Runs the embedding search and keeps an image set iff the host induces
    no edges beyond the embedded ones, which for equal edge counts means
    the induced subgraph is isomorphic to the pattern.
    """
    if pattern.n == 0:
        raise ValueError("pattern must have at least one vertex")
    target_edges = pattern.edge_count
    seen = set()
    edges = []
    for mapping in _mappings(pattern, host, budget):
        mask = 0
        for w in mapping:
            mask |= 1 << w
        if mask in seen:
            continue
        seen.add(mask)
        induced_edges = sum((host.out_rows[v] & mask).bit_count() for v in bits(mask))
        if induced_edges == target_edges:
            if len(edges) >= edge_cap:
                raise ResourceLimitError(
                    f"copy enumeration exceeded the edge cap of {edge_cap}"
                )
            edges.append(tuple(sorted(mapping)))
    edges.sort()
    return CopyHypergraph(n=host.n, k=pattern.n, edges=tuple(edges))


def _exact_cover(ground_mask, options, budget=None):
    """First exact cover of ground_mask by disjoint option masks, or None.

    options must be sorted; branching vertex is the uncovered one with the
    fewest live options (ties to the smallest vertex).
    """
    by_vertex = {}
    for idx, mask in options:
        for v in bits(mask):
            by_vertex.setdefault(v, []).append((idx, mask))
    nodes = 0

    def solve(remaining, chosen):
        nonlocal nodes
        if not remaining:
            return list(chosen)
        best_v, best_live = -1, None
        for v in bits(remaining):
            live = [
                (idx, mask)
                for idx, mask in by_vertex.get(v, ())
                if mask & ~remaining == 0
            ]
            if best_live is None or len(live) < len(best_live):
                best_v, best_live = v, live
                if not live:
                    return None
        for idx, mask in best_live:
            nodes += 1
            if budget is not None and nodes > budget:
                raise BudgetExceededError(budget)
            chosen.append(idx)
            found = solve(remaining & ~mask, chosen)
            if found is not None:
                return found
            chosen.pop()
        return None

    return solve(ground_mask, [])


def hypergraph_perfect_matching(hyper, vertices, budget=None):
    """Disjoint hyperedges covering exactly the given vertex set, or None.

    Raises BudgetExceededError when the node budget runs out first.
    """
    vset = set(vertices)
    ground = 0
    for v in vset:
        if not 0 <= v < hyper.n:
            raise ValueError(f"vertex {v} outside the hypergraph ground set")
        ground |= 1 << v
    if hyper.k and len(vset) % hyper.k:
        return None
    options = []
    for idx, e in enumerate(hyper.edges):
        mask = 0
        for v in e:
            mask |= 1 << v
        if mask & ~ground == 0:
            options.append((idx, mask))
    chosen = _exact_cover(ground, options, budget)
    if chosen is None:
        return None
    return tuple(hyper.edges[idx] for idx in chosen)


def perfect_tiling(
    pattern,
    host,
    partition=None,
    budget=None,
    edge_cap=DEFAULT_EDGE_CAP,
    lattice_only=False,
):
    """Search for a perfect tiling of the host by induced pattern copies.

    With a partition, the residue-lattice pre-check runs first and can
    refute without any cover search; lattice_only skips the cover search
    entirely (mode is then refuted-lattice or inconclusive).  Copies in a
    found tiling are re-verified against the host before returning.
    """
    if pattern.n == 0:
        raise ValueError("pattern must have at least one vertex")
    if host.n % pattern.n:
        return TilingResult(
            REFUTED_DIVISIBILITY,
            note=f"pattern order {pattern.n} does not divide host order {host.n}",
        )
    try:
        hyper = copy_hypergraph(pattern, host, edge_cap=edge_cap, budget=budget)
    except BudgetExceededError:
        return TilingResult(INCONCLUSIVE, note="budget exhausted during copy enumeration")
    if partition is not None:
        from .lattice import tiling_lattice_precheck

        verdict = tiling_lattice_precheck(hyper, partition)
        if verdict.refutes:
            return TilingResult(
                REFUTED_LATTICE,
                note=f"host index vector {verdict.target} unreachable modulo {verdict.modulus}",
            )
    if lattice_only:
        return TilingResult(INCONCLUSIVE, note="lattice pre-check only, no cover search run")
    try:
        matching = hypergraph_perfect_matching(hyper, range(host.n), budget)
    except BudgetExceededError:
        return TilingResult(INCONCLUSIVE, note="budget exhausted during cover search")
    if matching is None:
        return TilingResult(REFUTED_EXHAUSTIVE)
    tiling = Tiling(copies=matching)
    if not verify_tiling(pattern, host, tiling):
        raise AssertionError("solver produced a tiling that fails re-verification")
    return TilingResult(FOUND, tiling=tiling)


def greedy_tiling(pattern, host, edge_cap=DEFAULT_EDGE_CAP):
    """Maximal-by-inclusion tiling: scan copies in lexicographic order and
    take each one disjoint from those already taken."""
    hyper = copy_hypergraph(pattern, host, edge_cap=edge_cap)
    used = 0
    copies = []
    for e in hyper.edges:
        mask = 0
        for v in e:
            mask |= 1 << v
        if mask & used == 0:
            used |= mask
            copies.append(e)
    return Tiling(copies=tuple(copies))


def verify_tiling(pattern, host, tiling):
    """Check disjointness and that every block induces a copy of the pattern."""
    seen = set()
    for copy in tiling.copies:
        block = set(copy)
        if len(block) != pattern.n or block & seen:
            return False
        seen |= block
        sub = host.induced(block)
        if sub.edge_count != pattern.edge_count:
            return False
        if find_embedding(pattern, sub) is None:
            return False
    return True
