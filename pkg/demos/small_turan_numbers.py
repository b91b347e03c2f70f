"""
Exact Turan numbers by canonical augmentation
=============================================

Generate graphs vertex by vertex, one per isomorphism class, pruning any
branch that already contains the forbidden pattern or cannot catch up with
the best edge count found so far.
"""

from turan.detectors import PatternSpec
from turan.formulas import erdos_gallai_bound
from turan.io import encode
from turan.oracle import enumerate_graphs, exact_ex

# sanity: the generator reproduces the number of graphs on n vertices
print("graphs on n vertices:", [sum(1 for _ in enumerate_graphs(n)) for n in range(8)])

# Erdos-Gallai: ex(n, P_l) <= (l-2)n/2, tight when (l-1) divides n
for l in (4, 5, 6):
    row = []
    for n in range(l - 1, 11):
        rep = exact_ex(n, PatternSpec.single_path(l))
        mark = "*" if n % (l - 1) == 0 else " "
        row.append(f"{rep.max_edges}/{erdos_gallai_bound(n, l).value}{mark}")
    print(f"P{l}: " + " ".join(row))

# every extremal graph comes back, as graph6
rep = exact_ex(7, PatternSpec.single_path(4))
print("\nex(7, P4) =", rep.max_edges, "attained by", [encode(w.to_graph()).decode() for w in rep.witnesses])
print("nodes explored:", rep.nodes_explored, "complete:", rep.complete)

# a tiny node budget gives an honest partial answer: the best verified construction
rep = exact_ex(10, PatternSpec.single_path(7), budget_nodes=5)
print("budget-capped:", rep.max_edges, "complete:", rep.complete)
