"""
Shared neighbourhoods inside a forbidden pair
=============================================

If a graph avoids two disjoint copies of P4, every P4 it does contain must
have a pair of vertices with many common neighbours.  Check the guaranteed
count on the extremal graph and look at the hypergraph of such pairs.
"""

import math

from turan.constructions import pl_extremal
from turan.detectors import (
    PatternSpec,
    build_codegree_hypergraph,
    enumerate_path_vertex_sets,
    find_high_codegree_subset,
    flatten,
    is_intersecting,
)
from turan.formulas import badlemma_bound
from turan.oracle import exact_ex

n = 12
g = pl_extremal(n, 2, 4)
ex_rest = exact_ex(n - 4, PatternSpec.single_path(4)).max_edges
need = badlemma_bound(n, g.m, 4, 2, ex_rest)
print(f"{g.m} edges, ex({n - 4}, P4) = {ex_rest}, guaranteed codegree >= {need} -> {math.ceil(need)}")

copies = enumerate_path_vertex_sets(g, 4)
worst = min(find_high_codegree_subset(g, c, 2)[1] for c in copies)
print(f"{len(copies)} P4 vertex sets; weakest best pair still has {worst} common neighbours")

edges = build_codegree_hypergraph(pl_extremal(20, 2, 4), 4, 10)
print("hyperedges:", [sorted(e) for e in edges])
print("intersecting:", is_intersecting(edges), "| flattened edges:", flatten(edges, 20).edges())
