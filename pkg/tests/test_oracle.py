import pytest

from turan.canon import canonical_code
from turan.constructions import p3_extremal, pl_extremal
from turan.detectors import PatternSpec, contains_pattern
from turan.graph import complete, disjoint_union, empty, matching
from turan.naive import naive_ex, pattern_graph
from turan.oracle import (
    IncompleteSearchError,
    OracleError,
    enumerate_graphs,
    exact_ex,
    extremal_graphs,
    lower_bound_graphs,
    verify_formula_range,
)

P = PatternSpec


def test_spec_examples():
    r = exact_ex(6, P.paths(2, 3))
    assert r.complete and r.max_edges == 10
    assert canonical_code(disjoint_union(complete(5), complete(1))) in r.witnesses
    r = exact_ex(5, P.single_path(5))
    assert r.max_edges == 6 and canonical_code(disjoint_union(complete(4), complete(1))) in r.witnesses
    r = exact_ex(3, P.single_path(4))
    assert r.max_edges == 3 and r.witnesses == (canonical_code(complete(3)),)


def test_extremal_graphs():
    (only,) = extremal_graphs(4, P.single_path(3))
    assert canonical_code(only) == canonical_code(matching(4))
    (k2,) = extremal_graphs(2, P.single_path(3))
    assert k2 == complete(2)
    assert extremal_graphs(6, P.paths(2, 3))


def test_witnesses_sound():
    for n in range(1, 10):
        for p in (P.paths(2, 3), P.single_path(5), P.paths(2, 4)):
            r = exact_ex(n, p)
            assert r.complete and r.witnesses
            for g in r.witness_graphs():
                assert g.n == n and g.m == r.max_edges
                assert not contains_pattern(g, p)


def test_monotone_in_n():
    for p in (P.paths(2, 3), P.single_path(6), P.of_forest(matching(4))):
        vals = [exact_ex(n, p).max_edges for n in range(1, 10)]
        assert vals == sorted(vals)


def test_against_naive_small():
    for p in (P.single_path(3), P.paths(2, 2), P.single_path(4)):
        for n in range(1, 7):
            r = exact_ex(n, p)
            assert (r.max_edges, frozenset(r.witnesses)) == naive_ex(n, pattern_graph(p))


def test_unseeded_search_matches_seeded():
    for n in range(3, 9):
        a = exact_ex(n, P.paths(2, 3))
        b = exact_ex(n, P.paths(2, 3), seed=False, use_certificates=False)
        assert (a.max_edges, a.witnesses) == (b.max_edges, b.witnesses)
        assert b.nodes_explored >= a.nodes_explored


def test_construction_lower_bounds():
    for n in range(5, 10):
        assert exact_ex(n, P.paths(2, 4)).max_edges >= pl_extremal(n, 2, 4).m
    for n in range(6, 10):
        assert exact_ex(n, P.paths(2, 3)).max_edges >= p3_extremal(n, 2).m


def test_enumeration_counts():
    assert [sum(1 for _ in enumerate_graphs(n)) for n in range(0, 8)] == [1, 1, 2, 4, 11, 34, 156, 1044]
    # triangle-free is not a pattern here; P3-free graphs are matchings plus isolated vertices
    assert sum(1 for _ in enumerate_graphs(7, P.single_path(3))) == 4


def test_budget_marks_incomplete():
    r = exact_ex(9, P.single_path(6), budget_nodes=3, seed=False)
    assert not r.complete
    with pytest.raises(IncompleteSearchError):
        extremal_graphs(9, P.single_path(6), budget_nodes=3, seed=False)
    r = exact_ex(9, P.single_path(6), budget_seconds=0.0)
    assert not r.complete and r.max_edges >= 0


def test_unavoidable_pattern():
    with pytest.raises(OracleError):
        exact_ex(3, P.of_forest(empty(2)))
    assert exact_ex(1, P.of_forest(empty(2))).max_edges == 0


def test_caps():
    with pytest.raises(OracleError):
        exact_ex(13, P.paths(2, 3))
    assert exact_ex(13, P.single_path(4)).complete
    with pytest.raises(OracleError):
        exact_ex(15, P.single_path(4))


def test_threads_deterministic():
    for n, p in [(8, P.paths(2, 3)), (8, P.single_path(5))]:
        a, b = exact_ex(n, p), exact_ex(n, p, threads=3)
        assert (a.max_edges, a.witnesses) == (b.max_edges, b.witnesses)


def test_lower_bound_graphs_are_free():
    for n in range(0, 12):
        for p in (P.paths(2, 3), P.paths(3, 4), P.single_path(5), P.of_forest(matching(4))):
            for g in lower_bound_graphs(n, p):
                assert g.n == n and not contains_pattern(g, p)


def test_verify_formula_range():
    rows = verify_formula_range("k_p3", {"k": 2, "gorgol": True}, range(5, 10))
    assert rows[0].relation == "n/a"
    assert all(r.relation == "=" and not r.contradiction for r in rows[1:])
    rows = verify_formula_range("k_pl", {"k": 2, "l": 4}, [6, 8, 20], oracle_cap=9)
    assert [r.source for r in rows] == ["oracle", "oracle", "construction"]
    assert not any(r.contradiction for r in rows) and not any(r.in_proved_range for r in rows)
    rows = verify_formula_range("forest", {"h": matching(4)}, [5, 6])
    assert all(r.conditional_on_erdos_sos for r in rows)
    with pytest.raises(OracleError):
        verify_formula_range("k_k4", {}, [5])


def test_report_dict():
    d = exact_ex(6, P.paths(2, 3)).as_dict()
    assert d["max_edges"] == 10 and d["complete"] and isinstance(d["witnesses"][0], str)


def test_zero_vertices():
    r = exact_ex(0, P.single_path(2))
    assert r.max_edges == 0 and r.witnesses[0].to_graph() == empty(0)
