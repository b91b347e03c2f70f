from fractions import Fraction
from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import double_star
from turan.formulas import (
    DomainError,
    badlemma_bound,
    erdos_gallai_bound,
    ex_equibipartite_forest,
    ex_k_p3,
    ex_k_pl,
    ex_p3_single,
    forest_threshold,
    gorgol_generic_lower,
    gorgol_lower_p3,
    longpath_threshold,
)
from turan.graph import disjoint_union, matching, path


def test_p3_single():
    assert ex_p3_single(5).value == 2
    assert ex_p3_single(0).value == 0
    assert ex_p3_single(9).value == 4
    assert ex_p3_single(9).in_proved_range


def test_erdos_gallai():
    assert erdos_gallai_bound(10, 6).value == 20
    assert erdos_gallai_bound(5, 6).value == 10
    r = erdos_gallai_bound(7, 3)
    assert r.value == 3 and r.exact_rational == Fraction(7, 2) and r.is_upper_bound


def test_k_p3():
    r = ex_k_p3(14, 2)
    assert r.value == 19 and r.in_proved_range
    assert ex_k_p3(7, 1).value == 3 and ex_k_p3(7, 1).in_proved_range
    r = ex_k_p3(9, 3)
    assert not r.in_proved_range
    with pytest.raises(DomainError):
        ex_k_p3(5, 2)


def test_gorgol():
    assert gorgol_lower_p3(6, 2).value == 10
    assert gorgol_lower_p3(9, 2).value == 12
    with pytest.raises(DomainError):
        gorgol_lower_p3(5, 2)


@given(st.integers(1, 12), st.integers(0, 80))
def test_gorgol_high_piece_is_theorem(k, extra):
    n = 5 * k - 1 + extra
    assert ex_k_p3(n, k).value == gorgol_lower_p3(n, k).value


def test_k_pl_examples():
    assert longpath_threshold(2, 4) == 296
    r = ex_k_pl(300, 2, 4)
    assert r.value == 894 and r.in_proved_range
    assert ex_k_pl(1000, 2, 5).value == 2995
    r = ex_k_pl(8, 2, 4)
    assert r.value == 18 and not r.in_proved_range
    assert not ex_k_pl(295, 2, 4).in_proved_range and ex_k_pl(296, 2, 4).in_proved_range
    for bad in [(10, 1, 4), (10, 2, 3)]:
        with pytest.raises(DomainError):
            ex_k_pl(*bad)


@given(st.integers(2, 4), st.integers(4, 9), st.integers(0, 200))
def test_k_pl_monotone(k, l, n):
    assert ex_k_pl(n + 1, k, l).value >= ex_k_pl(n, k, l).value


@pytest.mark.parametrize("k, l", [(2, 4), (2, 6), (3, 4), (3, 8)])
def test_even_gap_to_erdos_gallai_is_constant(k, l):
    gaps = []
    for n in (500, 2000):
        v = ex_k_pl(n, k, l).value
        eg = erdos_gallai_bound(n, k * l).value
        assert v <= eg
        gaps.append(eg - v)
    assert gaps[0] == gaps[1]


def test_forest_formula():
    r = ex_equibipartite_forest(100, matching(4))
    assert r.value == 99 and r.conditional_on_erdos_sos
    h = disjoint_union(path(2), double_star())
    assert ex_equibipartite_forest(100, h).value == 291
    assert not ex_equibipartite_forest(100, h).in_proved_range
    assert forest_threshold(2) == 12 + 32 * 32 * 6
    with pytest.raises(DomainError):
        ex_equibipartite_forest(10, path(6))


def test_badlemma():
    assert badlemma_bound(20, 54, 4, 2, 16) == Fraction(8, 9)
    # t = 1 collapses to m' / r / r
    n, m, r, ex = 30, 100, 5, 20
    mp = m - ex - comb(r, 2)
    assert badlemma_bound(n, m, r, 1, ex) == Fraction(mp, r) / r
    assert badlemma_bound(12, 3, 4, 2, 10) < 0
    with pytest.raises(DomainError):
        badlemma_bound(3, 3, 4, 2, 0)


def test_gorgol_generic():
    first, _ = gorgol_generic_lower(6, 2, 3, ex_p3_single)
    assert first == 10
    _, second = gorgol_generic_lower(9, 2, 3, ex_p3_single)
    assert second == 12 == gorgol_lower_p3(9, 2).value
    a, b = gorgol_generic_lower(10, 1, 3, lambda x: x // 2)
    assert a == b == 5
    with pytest.raises(DomainError):
        gorgol_generic_lower(5, 2, 3, ex_p3_single)


def test_as_dict():
    d = ex_k_p3(14, 2).as_dict()
    assert d["value"] == 19 and d["exact_rational"] == "19"
