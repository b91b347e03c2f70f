import random
from itertools import combinations

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import double_star
from turan.graph import complete, disjoint_union, from_edges, induced_subgraph, matching, path, star
from turan.treelab import (
    HasPerfectMatchingError,
    NotAForestError,
    NotBipartiteError,
    NotEquibipartiteError,
    SingleComponentError,
    bipartition,
    check_all_unequal_partitions,
    enumerate_equibipartite_trees,
    enumerate_trees,
    hall_violator,
    has_perfect_matching,
    is_equibipartite,
    maximum_matching,
    nopm_partition,
    perfect_matching,
    prufer_to_tree,
    random_equibipartite_tree,
    unequal_partition_counterexample,
    validate_forest,
)
from turan.formulas import DomainError


def _leaf_peel_pm(t) -> bool:
    # independent check: in a forest, a leaf must be matched to its neighbour
    adj = {v: set(u for u in range(t.n) if t.has_edge(u, v)) for v in range(t.n)}
    alive = set(range(t.n))
    while alive:
        leaf = next((v for v in sorted(alive) if len(adj[v] & alive) <= 1), None)
        if leaf is None:
            return False
        nb = adj[leaf] & alive
        if not nb:
            return False
        alive -= {leaf, nb.pop()}
    return True


def test_bipartition_examples():
    b = bipartition(path(6))
    assert len(b.side_a) == len(b.side_b) == 3 and 0 in b.side_a
    b = bipartition(star(4))
    assert {len(b.side_a), len(b.side_b)} == {1, 4}
    b = bipartition(double_star())
    assert b.side_a == {0, 4, 5} and b.side_b == {1, 2, 3}
    with pytest.raises(NotBipartiteError):
        bipartition(complete(3))


def test_equibipartite():
    assert is_equibipartite(path(6))
    assert not is_equibipartite(star(3))
    assert is_equibipartite(disjoint_union(path(2), double_star()))
    with pytest.raises(NotAForestError):
        is_equibipartite(complete(3))


def test_perfect_matching():
    assert has_perfect_matching(path(6))
    assert not has_perfect_matching(double_star())
    pm = perfect_matching(path(4))
    assert sorted(pm) == [(0, 1), (2, 3)]
    assert len(maximum_matching(complete(5))) == 4  # symmetric mate map of two edges


def test_pm_classification_against_leaf_peeling():
    for two_l in range(2, 11, 2):
        for t in enumerate_equibipartite_trees(two_l):
            assert has_perfect_matching(t) == _leaf_peel_pm(t)


def test_hall_violator():
    t = double_star()
    s = hall_violator(t, "a")
    assert s == {4, 5}
    with pytest.raises(DomainError):
        hall_violator(path(4), "a")
    with pytest.raises(DomainError):
        hall_violator(path(4), "b")


def test_hall_violator_fuzz():
    hits = 0
    for seed in range(200):
        t = random_equibipartite_tree(2 * (2 + seed % 6), seed)
        if has_perfect_matching(t):
            continue
        for side in "ab":
            try:
                s = hall_violator(t, side)
            except DomainError:
                continue
            hits += 1
            nb = set()
            for v in s:
                nb |= {u for u in range(t.n) if t.has_edge(u, v)}
            assert len(nb) < len(s)
            assert induced_subgraph(t, s | nb).is_connected()
            # smallest: nothing of smaller size violates on the same side
            side_set = bipartition(t).side_a if side == "a" else bipartition(t).side_b
            for sub in combinations(sorted(side_set), len(s) - 1):
                nb2 = {u for v in sub for u in range(t.n) if t.has_edge(u, v)}
                assert len(nb2) >= len(sub)
    assert hits > 50


def test_nopm_partition():
    cert = nopm_partition(double_star())
    assert cert.small_class == {0, 1} and cert.small_edge == (0, 1)
    assert cert.large_class == {2, 3, 4, 5}
    assert cert.check(double_star()) == []
    with pytest.raises(HasPerfectMatchingError):
        nopm_partition(path(6))
    with pytest.raises(NotEquibipartiteError):
        nopm_partition(star(3))


def test_unequal_partitions():
    assert check_all_unequal_partitions(path(4))
    assert unequal_partition_counterexample(double_star()) == {2, 3, 4, 5}
    with pytest.raises(DomainError):
        check_all_unequal_partitions(path(24))


def test_exhaustive_lemmas_up_to_12():
    for two_l in range(2, 13, 2):
        for t in enumerate_equibipartite_trees(two_l):
            if has_perfect_matching(t):
                assert check_all_unequal_partitions(t)
            else:
                assert not check_all_unequal_partitions(t)
                assert nopm_partition(t).check(t) == []


def test_tree_enumeration_counts():
    want = [1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235]
    for n, c in enumerate(want, start=1):
        assert len(list(enumerate_trees(n))) == c
    assert [len(list(enumerate_equibipartite_trees(k))) for k in (2, 4, 6, 8, 10)] == [1, 1, 3, 9, 37]
    (only,) = enumerate_equibipartite_trees(4)
    assert sorted(only.degrees()) == [1, 1, 2, 2]
    with pytest.raises(DomainError):
        list(enumerate_equibipartite_trees(5))


def test_six_vertex_equibipartite_against_labelled_trees():
    # every labelled tree on 6 vertices, via Prufer sequences, up to isomorphism
    seen = set()
    from itertools import product

    from turan.canon import canonical_code

    for seq in product(range(6), repeat=4):
        t = prufer_to_tree(list(seq), 6)
        if is_equibipartite(t):
            seen.add(canonical_code(t))
    assert seen == {canonical_code(t) for t in enumerate_equibipartite_trees(6)}


def test_random_tree_deterministic():
    for seed in range(20):
        a = random_equibipartite_tree(10, seed)
        assert a == random_equibipartite_tree(10, seed)
        assert a.is_forest() and a.is_connected() and is_equibipartite(a)


def test_validate_forest():
    info = validate_forest(matching(4))
    assert (info.l, info.components, info.has_pm) == (2, 2, True)
    info = validate_forest(disjoint_union(path(2), double_star()))
    assert (info.l, info.components, info.has_pm, info.smallest_half) == (4, 2, False, 1)
    with pytest.raises(SingleComponentError):
        validate_forest(path(6))
    with pytest.raises(NotAForestError):
        validate_forest(complete(3))
    with pytest.raises(NotEquibipartiteError):
        validate_forest(disjoint_union(star(3), path(2)))


@settings(max_examples=60, deadline=None)
@given(st.lists(st.tuples(st.integers(1, 5), st.integers(0, 10_000)), min_size=1, max_size=3))
def test_forest_pm_iff_components_pm(parts):
    trees = [random_equibipartite_tree(2 * half, seed) for half, seed in parts]
    f = trees[0]
    for t in trees[1:]:
        f = disjoint_union(f, t)
    assert has_perfect_matching(f) == all(has_perfect_matching(t) for t in trees)


def test_matching_agrees_with_networkx():
    rng = random.Random(8)
    for i in range(80):
        n = rng.randint(2, 12)
        if i % 2:
            t = random_equibipartite_tree(n + n % 2, rng.randrange(10**6))
        else:
            t = from_edges(n, [e for e in combinations(range(n), 2) if rng.random() < 0.3])
        g = nx.Graph(t.edges())
        g.add_nodes_from(range(t.n))
        mate = maximum_matching(t)
        assert all(mate[mate[v]] == v and t.has_edge(v, mate[v]) for v in mate)
        assert len(mate) // 2 == len(nx.max_weight_matching(g, maxcardinality=True))
