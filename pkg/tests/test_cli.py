import json

import pytest

from turan.cli import PatternSyntaxError, main, parse_pattern
from turan.constructions import p3_extremal
from turan.detectors import PatternSpec
from turan.graph import complete, disjoint_union, from_edges, path
from turan.io import read_graph, write_graph


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_parse_pattern(tmp_path):
    assert parse_pattern("2*P3") == PatternSpec.paths(2, 3)
    assert parse_pattern("P6") == PatternSpec.single_path(6)
    for bad, pos in [("2*P", 3), ("2P3", 1), ("Q3", 0), ("P3x", 2), ("", 0)]:
        with pytest.raises(PatternSyntaxError) as e:
            parse_pattern(bad)
        assert e.value.pos == pos
    f = tmp_path / "h.g6"
    write_graph(from_edges(4, [(0, 1), (2, 3)]), f)
    assert parse_pattern(f"@{f}").kind == "forest"


def test_formula(capsys):
    code, out, _ = run(capsys, "formula", "kp3", "--n", "14", "--k", "2")
    assert code == 0 and "value: 19" in out and "in_proved_range: True" in out
    code, out, _ = run(capsys, "formula", "kpl", "--n", "8", "--k", "2", "--l", "4", "--json")
    d = json.loads(out)
    assert d["value"] == 18 and d["in_proved_range"] is False
    code, _, err = run(capsys, "formula", "kpl", "--n", "8", "--k", "1", "--l", "4")
    assert code == 2 and "k >= 2" in err
    code, _, err = run(capsys, "formula", "kp3", "--n", "8")
    assert code == 2 and "--k" in err


def test_formula_forest(capsys, tmp_path):
    h = tmp_path / "forest.g6"
    ds = from_edges(6, [(0, 1), (0, 2), (0, 3), (1, 4), (1, 5)])
    write_graph(disjoint_union(path(2), ds), h)
    code, out, _ = run(capsys, "formula", "forest", "--n", "100", "--h", str(h), "--json")
    assert code == 0 and json.loads(out)["value"] == 291
    code, out, _ = run(capsys, "formula", "eg-bound", "--n", "7", "--l", "3", "--json")
    assert json.loads(out)["exact_rational"] == "7/2"
    code, out, _ = run(capsys, "formula", "gorgol", "--n", "6", "--k", "2", "--json")
    assert json.loads(out)["value"] == 10


def test_construct(capsys, tmp_path):
    code, out, err = run(capsys, "construct", "p3", "--n", "14", "--k", "2", "--check")
    assert code == 0 and "edges: 19" in err and "free of 2*P3: yes" in err
    assert out.strip()  # graph6 on stdout
    f = tmp_path / "eg.txt"
    code, out, _ = run(capsys, "construct", "eg", "--n", "10", "--l", "6", "--out", str(f), "--format", "edgelist")
    assert "edges: 20" in out and read_graph(f).m == 20
    code, out, _ = run(capsys, "construct", "pl", "--n", "20", "--k", "2", "--l", "5", "--out",
                       str(tmp_path / "pl.g6"), "--json", "--check")
    d = json.loads(out)
    assert d["edges"] == 55 and d["free"] is True
    code, _, err = run(capsys, "construct", "pl", "--n", "3", "--k", "2", "--l", "5")
    assert code == 2


def test_check(capsys, tmp_path):
    fig = tmp_path / "fig.g6"
    write_graph(p3_extremal(14, 2), fig)
    code, out, _ = run(capsys, "check", "--graph", str(fig), "--forbid", "2*P3")
    assert code == 0 and out.startswith("free")
    k6 = tmp_path / "k6.g6"
    write_graph(complete(6), k6)
    code, out, _ = run(capsys, "check", "--graph", str(k6), "--forbid", "2*P3", "--json")
    d = json.loads(out)
    assert code == 1 and d["contains"] and len(d["witness"]) == 2
    code, _, err = run(capsys, "check", "--graph", str(k6), "--forbid", "2*P")
    assert code == 2 and "position 3" in err
    code, _, err = run(capsys, "check", "--graph", str(tmp_path / "missing.g6"), "--forbid", "P3")
    assert code == 2


def test_oracle_cmd(capsys):
    code, out, _ = run(capsys, "oracle", "--n", "6", "--forbid", "2*P3")
    d = json.loads(out)
    assert code == 0 and d["max_edges"] == 10 and d["complete"]
    assert json.loads(run(capsys, "oracle", "--n", "3", "--forbid", "P4")[1])["max_edges"] == 3
    one = json.loads(run(capsys, "oracle", "--n", "5", "--forbid", "P5")[1])
    two = json.loads(run(capsys, "oracle", "--n", "5", "--forbid", "P5", "--threads", "2")[1])
    assert one["max_edges"] == two["max_edges"] == 6 and one["witnesses"] == two["witnesses"]
    code, _, err = run(capsys, "oracle", "--n", "13", "--forbid", "2*P3")
    assert code == 2 and "cap" in err


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "trees", "--max-vertices", "10")
    assert code == 0 and "trees: PASS" in out
    code, out, _ = run(capsys, "verify", "eg", "--l", "6", "--n-max", "10", "--json")
    d = json.loads(out)
    rows = {r["n"]: r for r in d["suites"][0]["rows"]}
    assert d["passed"] and rows[5]["oracle"] == rows[5]["bound"] and rows[10]["oracle"] == 20
    code, out, _ = run(capsys, "verify", "p3", "--n-max", "8")
    assert code == 0 and "p3: PASS" in out
