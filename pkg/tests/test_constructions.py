import pytest

from conftest import double_star
from turan.constructions import (
    erdos_gallai_extremal,
    forest_extremal,
    gorgol_construction,
    p3_extremal,
    p3_gorgol_low,
    pl_extremal,
)
from turan.detectors import PatternSpec, contains_pattern, longest_path
from turan.formulas import DomainError, ex_equibipartite_forest, ex_k_p3, gorgol_lower_p3
from turan.graph import complete, disjoint_union, join, matching, path, empty


def test_p3_examples():
    g = p3_extremal(14, 2)
    assert g.m == 19 and not contains_pattern(g, PatternSpec.paths(2, 3))
    assert p3_extremal(5, 1) == matching(5)
    assert p3_extremal(9, 2).m == 12 == gorgol_lower_p3(9, 2).value
    with pytest.raises(DomainError):
        p3_extremal(1, 2)


def test_p3_low():
    g = p3_gorgol_low(8, 2)
    assert g.m == gorgol_lower_p3(8, 2).value
    assert not contains_pattern(g, PatternSpec.paths(2, 3))


def test_pl_examples():
    assert pl_extremal(20, 2, 5).m == 55
    g = pl_extremal(20, 2, 4)
    assert g.m == 54
    assert not contains_pattern(g, PatternSpec.paths(2, 4))
    assert pl_extremal(20, 2, 5).has_edge(3, 4)
    with pytest.raises(DomainError):
        pl_extremal(4, 2, 4)


def test_erdos_gallai_examples():
    g = erdos_gallai_extremal(10, 6)
    assert g == disjoint_union(complete(5), complete(5)) and g.m == 20
    assert erdos_gallai_extremal(5, 6) == complete(5)
    g = erdos_gallai_extremal(11, 6)
    assert g.m == 20 and longest_path(g)[0] == 5


def test_erdos_gallai_grid():
    for l in range(2, 9):
        for n in range(0, 41):
            g = erdos_gallai_extremal(n, l)
            assert longest_path(g)[0] <= l - 1
            if n % (l - 1) == 0:
                assert 2 * g.m == (l - 2) * n


def test_forest_examples():
    g = forest_extremal(100, matching(4))
    assert g == join(complete(1), empty(99)) and g.m == 99
    h = disjoint_union(path(2), double_star())
    g = forest_extremal(100, h)
    assert g.m == 291 == ex_equibipartite_forest(100, h).value
    assert g == join(empty(3), empty(97))


def test_gorgol_construction():
    g = gorgol_construction(6, 2, matching(1), 3, "union")
    assert g.m == 10 and g.n == 6
    base = path(5)
    assert gorgol_construction(5, 1, base, 3, "join") == base
    with pytest.raises(DomainError):
        gorgol_construction(6, 2, matching(2), 3, "union")
    with pytest.raises(DomainError):
        gorgol_construction(6, 2, matching(5), 3, "sideways")
    # P3 and P4 spot checks: k copies never fit
    for v, single in [(3, matching), (4, lambda x: erdos_gallai_extremal(x, 4))]:
        for k in (2, 3):
            for n in range(k * v, k * v + 6):
                p = PatternSpec.paths(k, v)
                assert not contains_pattern(gorgol_construction(n, k, single(n - k * v + 1), v, "union"), p)
                assert not contains_pattern(gorgol_construction(n, k, single(n - k + 1), v, "join"), p)


def test_p3_grid_counts_and_freeness():
    for k in range(1, 5):
        p = PatternSpec.paths(k, 3)
        for n in range(3 * k, 61):
            g = p3_extremal(n, k)
            assert g.m == ex_k_p3(n, k).value
            assert not contains_pattern(g, p)
