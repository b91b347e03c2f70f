"""
Equibipartite trees and perfect matchings
=========================================

The forest result splits on whether the forest has a perfect matching.
Here the double star S_{2,2} (no perfect matching) is taken apart by hand.
"""

from turan.constructions import forest_extremal
from turan.detectors import PatternSpec, find_pattern
from turan.formulas import ex_equibipartite_forest
from turan.graph import disjoint_union, from_edges, path
from turan.treelab import (
    bipartition,
    enumerate_equibipartite_trees,
    hall_violator,
    has_perfect_matching,
    nopm_partition,
    unequal_partition_counterexample,
)

# x=0, y=1; a, b hang off x; c, d hang off y
s22 = from_edges(6, [(0, 1), (0, 2), (0, 3), (1, 4), (1, 5)])
print("bipartition:", bipartition(s22))
print("perfect matching:", has_perfect_matching(s22))
print("Hall violator on x's side:", sorted(hall_violator(s22, "a")))

cert = nopm_partition(s22)
print("partition certificate:", sorted(cert.small_class), "|", sorted(cert.large_class), "edge", cert.small_edge)
print("an edgeless larger class:", sorted(unequal_partition_counterexample(s22)))

# count trees on each side of the dichotomy
for two_l in (6, 8, 10, 12):
    trees = list(enumerate_equibipartite_trees(two_l))
    pm = sum(map(has_perfect_matching, trees))
    print(f"{two_l} vertices: {len(trees)} equibipartite trees, {pm} with a perfect matching")

# the extremal graph for P2 u S22 is complete bipartite K_{3, n-3}
h = disjoint_union(path(2), s22)
for n in (10, 40):
    g = forest_extremal(n, h)
    free = find_pattern(g, PatternSpec.of_forest(h)) is None
    print(f"n={n}: {g.m} edges, formula {ex_equibipartite_forest(n, h).value}, free: {free}")
