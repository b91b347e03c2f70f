"""
Disjoint copies of short paths
==============================

Build the extremal graphs for k*P3 and k*P_l, check them with the packing
detector, and compare the closed forms with exhaustive search where the
search is still cheap.
"""

from turan.constructions import p3_extremal, pl_extremal
from turan.detectors import PatternSpec, find_pattern
from turan.formulas import ex_k_p3, ex_k_pl, gorgol_lower_p3, longpath_threshold
from turan.oracle import exact_ex

# K_{k-1} joined to a perfect matching: every P3 has to touch the clique
g = p3_extremal(14, 2)
print("p3_extremal(14, 2):", g.m, "edges; formula", ex_k_p3(14, 2).value)
print("  contains 2*P3?", find_pattern(g, PatternSpec.paths(2, 3)) is not None)

# one more edge anywhere creates two disjoint P3
u, v = next((u, v) for u in range(g.n) for v in range(u + 1, g.n) if not g.has_edge(u, v))
w = find_pattern(g.add_edge(u, v), PatternSpec.paths(2, 3))
print(f"  after adding {u}-{v}:", w.parts)

# below 7k the theorem is not proved; small cases come from the oracle
print("\nn   oracle  gorgol  theorem-formula")
for n in range(6, 12):
    rep = exact_ex(n, PatternSpec.paths(2, 3))
    print(f"{n:<3} {rep.max_edges:<7} {gorgol_lower_p3(n, 2).value:<7} {ex_k_p3(n, 2).value}")

# longer paths: a clique of size k*floor(l/2)-1 joined to an independent set
for l in (4, 5, 6):
    g = pl_extremal(20, 2, l)
    free = find_pattern(g, PatternSpec.paths(2, l)) is None
    print(f"\npl_extremal(20, 2, {l}): {g.m} edges (formula {ex_k_pl(20, 2, l).value}), 2*P{l}-free: {free}")
print("\nthe k*P_l value is proved only from n =", longpath_threshold(2, 4), "when k=2, l=4")
