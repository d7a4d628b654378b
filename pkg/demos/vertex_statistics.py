"""
Vertex statistics in nearly regular tournaments
===============================================

Tournaments close to regular cannot hide their structure: every vertex
carries many directed triangles and many copies of the strong 4-vertex
tournament D, inside windows controlled by the slack c = 1/2 - delta^0/n.
"""

from fractions import Fraction

from oriograph.analysis import (
    cyclic_edge_stat,
    cyclic_edge_window,
    d_copies_floor,
    d_copy_counts,
    extremal_check,
    find_extremal_partition,
    semi_degree_slack,
)
from oriograph.generators import d_abc, rotational, t_sk
from oriograph.search import random_semi_regular

# A regular tournament has the smallest possible slack, 1/(2n).
qr7 = rotational(7, [1, 2, 4])
print("QR_7 slack:", semi_degree_slack(qr7))

# Every vertex of QR_7 sees 6 edges from its out- into its in-neighborhood
# and 12 copies of D through itself; the windows contain both.
lo, hi = cyclic_edge_window(qr7)
print("cyclic-edge window:", float(lo), "..", float(hi))
print("actual:", [cyclic_edge_stat(qr7, v) for v in range(7)])
print("D-copy floor:", float(d_copies_floor(qr7)), "actual:", d_copy_counts(qr7))

# The same holds across random semi-regular tournaments of any parity.
for n in (10, 15, 20):
    g = random_semi_regular(n, seed=1)
    lo, hi = cyclic_edge_window(g)
    floor = d_copies_floor(g)
    stats = [cyclic_edge_stat(g, v) for v in range(n)]
    copies = d_copy_counts(g)
    ok = all(lo <= x <= hi for x in stats) and all(x >= floor for x in copies)
    print(f"n={n}: slack {semi_degree_slack(g)}, windows hold: {ok}")

# Hosts built from three nearly equal transitive parts are gamma-extremal:
# a balanced 3-partition with almost no edges against the cyclic pattern.
host, parts = d_abc(4, 4, 4)
verdict = extremal_check(host, parts, gamma=0.1)
print("D_4 planted partition extremal:", verdict.ok,
      "reverse counts:", verdict.reverse_counts)

# Local search recovers such a partition from the graph alone.
found = find_extremal_partition(host, gamma=0.1, seed=7)
print("recovered parts:", [sorted(p) for p in found.parts])

# t_sk(2,1) is extremal with slightly unbalanced parts and 4 reverse edges.
w = t_sk(2, 1)
verdict = extremal_check(w.graph, w.partition, gamma=Fraction(1, 5))
print("t_sk(2,1) extremal at gamma=1/5:", verdict.ok,
      "sizes:", verdict.sizes, "reverse:", verdict.reverse_counts)
