"""Backtracking search for embeddings of one oriented graph in another.

An embedding is an injective vertex map sending every pattern edge to a
host edge with the same orientation; host edges between image vertices
of pattern non-edges are allowed (the copy need not be induced).

Pattern vertices are assigned in a fixed order, decreasing (total
degree, out-degree) with index as the tie-break, so constrained vertices
are placed early.  Candidate host vertices for the next pattern vertex
are the bitwise intersection of the appropriate in/out neighbourhoods of
the already placed neighbours, filtered by a degree precheck.  Host
candidates are tried in ascending index, so the first embedding found is
the lexicographically least one under the variable order, making every
search deterministic.

Searches take an optional node budget (number of attempted vertex
placements); exhausting it raises BudgetExceededError, which callers
report as an inconclusive outcome distinct from "no embedding exists".
"""

from __future__ import annotations

from .core import Embedding, bits
from .errors import BudgetExceededError
from .generators import cycle_power, f_r


def variable_order(pattern):
    """Pattern vertices sorted by decreasing (degree, out-degree), then index."""
    def key(v):
        o, i = pattern.degrees(v)
        return (-(o + i), -o, v)

    return sorted(range(pattern.n), key=key)


def _mappings(pattern, host, budget=None):
    """Yield every embedding as a tuple indexed by pattern vertex."""
    np_, nh = pattern.n, host.n
    if np_ > nh:
        return
    order = variable_order(pattern)
    pos = {v: i for i, v in enumerate(order)}
    # constraints[i]: list of (earlier slot, True if pattern edge earlier->current)
    constraints = []
    for i, v in enumerate(order):
        cons = []
        for u in order[:i]:
            if pattern.has_edge(u, v):
                cons.append((pos[u], True))
            elif pattern.has_edge(v, u):
                cons.append((pos[u], False))
        constraints.append(cons)

    full = (1 << nh) - 1
    degree_ok = []
    for v in order:
        po, pi = pattern.degrees(v)
        mask = 0
        for w in range(nh):
            if host.out_rows[w].bit_count() >= po and host.in_rows[w].bit_count() >= pi:
                mask |= 1 << w
        degree_ok.append(mask)

    out_rows, in_rows = host.out_rows, host.in_rows
    image = [0] * np_
    nodes = 0

    def extend(slot, used):
        nonlocal nodes
        if slot == np_:
            mapping = [0] * np_
            for i, v in enumerate(order):
                mapping[v] = image[i]
            yield tuple(mapping)
            return
        cand = degree_ok[slot] & ~used & full
        for earlier, forward in constraints[slot]:
            cand &= out_rows[image[earlier]] if forward else in_rows[image[earlier]]
            if not cand:
                return
        for w in bits(cand):
            nodes += 1
            if budget is not None and nodes > budget:
                raise BudgetExceededError(budget)
            image[slot] = w
            yield from extend(slot + 1, used | 1 << w)

    yield from extend(0, 0)


def iter_embeddings(pattern, host, budget=None):
    for mapping in _mappings(pattern, host, budget):
        yield Embedding(pattern, host, mapping)


def find_embedding(pattern, host, budget=None):
    """First embedding in deterministic order, or None if none exists."""
    for emb in iter_embeddings(pattern, host, budget):
        return emb
    return None


def count_embeddings(pattern, host, budget=None):
    """Number of injective orientation-preserving maps pattern -> host."""
    return sum(1 for _ in _mappings(pattern, host, budget))


def enumerate_index_vectors(pattern, host, partition, budget=None):
    """The exact set of index vectors of embedding images.

    The partition must cover all host vertices.
    """
    if not partition.covers(host):
        raise ValueError("partition does not cover the host vertex set")
    seen_images = set()
    vectors = set()
    for mapping in _mappings(pattern, host, budget):
        mask = 0
        for w in mapping:
            mask |= 1 << w
        if mask not in seen_images:
            seen_images.add(mask)
            vectors.add(partition.index_vector_of_mask(mask))
    return frozenset(vectors)


def turan_witnesses(pattern, max_level, max_power, budget=None):
    """Smallest recursive-triangle level r with pattern inside f_r(r), paired
    with the smallest k with pattern inside cycle_power(2k+1, k); None if
    either search fails within the bounds."""
    if max_level < 1 or max_power < 1:
        raise ValueError("bounds must be at least 1")
    level = next(
        (r for r in range(1, max_level + 1) if find_embedding(pattern, f_r(r), budget)),
        None,
    )
    if level is None:
        return None
    power = next(
        (
            k
            for k in range(1, max_power + 1)
            if find_embedding(pattern, cycle_power(2 * k + 1, k), budget)
        ),
        None,
    )
    if power is None:
        return None
    return (level, power)
