"""
A tour of the named graphs
==========================

Builds each generator family once, prints the basic invariants, and shows
the .dg text format round-tripping through the parser.
"""

from oriograph.core import parse, serialize
from oriograph.generators import (
    c3_barrier,
    cycle_power,
    d_abc,
    f_r,
    graph_s,
    rotational,
    t_sk,
    transitive,
)

# The directed triangle is the smallest rotational tournament.
c3 = rotational(3, [1])
print("C_3:", c3.n, "vertices,", len(c3.edges()), "edges,", c3.classify())

# Powers of a consistently oriented cycle: i -> i+1, ..., i+ell mod k.
c52 = cycle_power(5, 2)
print("C_5^2 is the regular tournament on 5 vertices:", c52.classify().is_regular)

# S: five vertices, eight edges, two unoriented pairs.  Not a tournament,
# but it embeds into every regular tournament we can reach by search.
s = graph_s()
print("S:", s.n, "vertices,", len(s.edges()), "edges")
print("S as .dg text:")
print(serialize(s))

# D_{a,b,c}: a directed triangle with transitive tournaments of sizes
# a, b, c substituted into its three corners.
d, parts = d_abc(1, 1, 2)
scores = sorted(d.out_degree(v) for v in range(d.n))
print("D = D_{1,1,2} has score sequence", scores)

# F_r: iterated triple substitution of C_3 into itself, 3^r vertices.
f2 = f_r(2)
print("F_2:", f2.n, "vertices, regular:", f2.classify().is_regular)

# t_sk(s, k): a semi-regular tournament built on parts of sizes
# q-1, q, q+1 with q = s(k+1); the partition is the interesting part.
w = t_sk(2, 1)
print("t_sk(2,1):", w.graph.n, "vertices, part sizes",
      sorted(len(p) for p in w.partition.parts),
      "reverse edges:", len(w.reverse_edges))

# c3_barrier(n): minimum semi-degree (3n-3)/2 but no perfect C_3-tiling.
host, _ = c3_barrier(3)
print("c3_barrier(3): delta^0 =", host.min_semi_degree(), "on", host.n, "vertices")

# Transitive tournaments close the tour; everything round-trips as text.
t5 = transitive(5)
assert parse(serialize(t5)) == t5
print("transitive(5) round-trips through the .dg format")
