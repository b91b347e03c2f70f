"""``turan`` command line.

Exit codes: 0 success (``check``: pattern-free), 1 ``check`` found the
pattern or a ``verify`` suite failed, 2 bad input or domain error.
Data goes to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Optional, Sequence

from . import constructions as C
from . import formulas as F
from .detectors import PatternSpec, find_pattern
from .graph import GraphError
from .io import FORMATS, encode, read_graph
from .oracle import exact_ex
from .suites import suite_eg, suite_p3, suite_pl, suite_trees


class PatternSyntaxError(GraphError):
    def __init__(self, text: str, pos: int, msg: str):
        super().__init__(f"bad pattern {text!r} at position {pos}: {msg}")
        self.pos = pos


def parse_pattern(text: str) -> PatternSpec:
    """``k*Pl``, ``Pl`` or ``@file`` (a forest graph file)."""
    if text.startswith("@"):
        if len(text) == 1:
            raise PatternSyntaxError(text, 1, "expected a file name after '@'")
        return PatternSpec.of_forest(read_graph(text[1:]))
    i = 0

    def digits() -> int:
        nonlocal i
        j = i
        while i < len(text) and text[i].isdigit():
            i += 1
        if i == j:
            raise PatternSyntaxError(text, i, "expected a number")
        return int(text[j:i])

    k = 1
    if text[:1].isdigit():
        k = digits()
        if i >= len(text) or text[i] != "*":
            raise PatternSyntaxError(text, i, "expected '*'")
        i += 1
    if i >= len(text) or text[i] != "P":
        raise PatternSyntaxError(text, i, "expected 'P'")
    i += 1
    l = digits()
    if i != len(text):
        raise PatternSyntaxError(text, i, "unexpected trailing characters")
    if k < 1 or l < 1:
        raise PatternSyntaxError(text, 0, "k and l must be positive")
    return PatternSpec.paths(k, l)


def _emit(obj, as_json: bool, lines: Optional[list[str]] = None) -> None:
    if as_json:
        print(json.dumps(obj, sort_keys=True))
    else:
        for line in lines if lines is not None else [f"{k}: {v}" for k, v in obj.items()]:
            print(line)


# -- formula ----------------------------------------------------------------


def cmd_formula(a) -> int:
    s = a.subject
    if s == "kp3":
        r = F.ex_k_p3(a.n, a.k)
    elif s == "kpl":
        r = F.ex_k_pl(a.n, a.k, a.l)
    elif s == "forest":
        r = F.ex_equibipartite_forest(a.n, read_graph(a.h))
    elif s == "eg-bound":
        r = F.erdos_gallai_bound(a.n, a.l)
    else:
        r = F.gorgol_lower_p3(a.n, a.k)
    _emit(r.as_dict(), a.json)
    return 0


# -- construct --------------------------------------------------------------


def _construct(a):
    fam = a.family
    if fam == "p3":
        return C.p3_extremal(a.n, a.k), PatternSpec.paths(a.k, 3)
    if fam == "p3-low":
        return C.p3_gorgol_low(a.n, a.k), PatternSpec.paths(a.k, 3)
    if fam == "pl":
        return C.pl_extremal(a.n, a.k, a.l), PatternSpec.paths(a.k, a.l)
    if fam == "eg":
        return C.erdos_gallai_extremal(a.n, a.l), PatternSpec.single_path(a.l)
    h = read_graph(a.h)
    return C.forest_extremal(a.n, h), PatternSpec.of_forest(h)


def cmd_construct(a) -> int:
    g, p = _construct(a)
    data = encode(g, a.format)
    if a.format == "graph6":
        data += b"\n"
    summary = {"family": a.family, "n": g.n, "edges": g.m, "graph6": encode(g, "graph6").decode()}
    lines = [f"edges: {g.m}"]
    if a.check:
        free = find_pattern(g, p) is None
        summary["pattern"] = str(p)
        summary["free"] = free
        lines.append(f"free of {p}: {'yes' if free else 'no'}")
    if a.out:
        Path(a.out).write_bytes(data)
        _emit(summary, a.json, lines)
    else:
        sys.stdout.buffer.write(data)
        sys.stdout.flush()
        print(json.dumps(summary, sort_keys=True) if a.json else "\n".join(lines), file=sys.stderr)
    return 0


# -- check ------------------------------------------------------------------


def cmd_check(a) -> int:
    p = parse_pattern(a.forbid)
    g = read_graph(a.graph, a.format)
    w = find_pattern(g, p)
    obj = {"pattern": str(p), "n": g.n, "edges": g.m, "contains": w is not None,
           "witness": [list(part) for part in w.parts] if w else None}
    lines = ["free" if w is None else "contains"]
    if w is not None:
        lines += [" ".join(map(str, part)) for part in w.parts]
    _emit(obj, a.json, lines)
    return 0 if w is None else 1


# -- oracle -----------------------------------------------------------------


def cmd_oracle(a) -> int:
    p = parse_pattern(a.forbid)
    rep = exact_ex(a.n, p, budget_nodes=a.budget_nodes, budget_seconds=a.budget_seconds, threads=a.threads)
    print(json.dumps(rep.as_dict(), sort_keys=True))
    return 0


# -- verify -----------------------------------------------------------------


def cmd_verify(a) -> int:
    runs = []
    want = ["p3", "pl", "trees", "eg"] if a.suite == "all" else [a.suite]
    for name in want:
        if name == "p3":
            runs.append(suite_p3(n_max=a.n_max or 9, k=a.k or 2, threads=a.threads))
        elif name == "pl":
            runs.append(suite_pl(n_max=a.n_max or 60, ks=(a.k,) if a.k else (2, 3),
                                 ls=(a.l,) if a.l else (4, 5, 6), threads=a.threads))
        elif name == "trees":
            runs.append(suite_trees(a.max_vertices))
        else:
            runs.append(suite_eg(ls=(a.l,) if a.l else (4, 5, 6, 7), n_max=a.n_max or 10, threads=a.threads))
    ok = all(r.passed for r in runs)
    if a.json:
        print(json.dumps({"passed": ok, "suites": [r.as_dict() for r in runs]}, sort_keys=True))
    else:
        for r in runs:
            for row in r.rows:
                print(r.name, " ".join(f"{k}={v}" for k, v in row.items()))
            print(f"{r.name}: {'PASS' if r.passed else 'FAIL'} ({r.failures} failures, {r.elapsed:.2f}s)")
    return 0 if ok else 1


# -- parser -----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="turan", description="Turán numbers for paths, path packings and forests.")
    sub = ap.add_subparsers(dest="command", required=True)

    f = sub.add_parser("formula", help="evaluate a closed-form value")
    f.add_argument("subject", choices=["kp3", "kpl", "forest", "eg-bound", "gorgol"])
    f.add_argument("--n", type=int, required=True)
    f.add_argument("--k", type=int)
    f.add_argument("--l", type=int)
    f.add_argument("--h", help="forest graph file")
    f.add_argument("--json", action="store_true")
    f.set_defaults(func=cmd_formula, needs={"kp3": "k", "kpl": "kl", "forest": "h", "eg-bound": "l", "gorgol": "k"})

    c = sub.add_parser("construct", help="write an extremal construction")
    c.add_argument("family", choices=["p3", "p3-low", "pl", "eg", "forest"])
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--k", type=int)
    c.add_argument("--l", type=int)
    c.add_argument("--h", help="forest graph file")
    c.add_argument("--format", choices=FORMATS, default="graph6")
    c.add_argument("--out")
    c.add_argument("--check", action="store_true", help="confirm freeness with the detector")
    c.add_argument("--json", action="store_true")
    c.set_defaults(func=cmd_construct, needs={"p3": "k", "p3-low": "k", "pl": "kl", "eg": "l", "forest": "h"})

    k = sub.add_parser("check", help="test a graph for a forbidden pattern")
    k.add_argument("--graph", required=True)
    k.add_argument("--forbid", required=True, help="k*Pl, Pl or @forest-file")
    k.add_argument("--format", choices=FORMATS)
    k.add_argument("--json", action="store_true")
    k.set_defaults(func=cmd_check)

    o = sub.add_parser("oracle", help="exact ex(n, pattern) by exhaustive search")
    o.add_argument("--n", type=int, required=True)
    o.add_argument("--forbid", required=True)
    o.add_argument("--budget-nodes", type=int)
    o.add_argument("--budget-seconds", type=float)
    o.add_argument("--threads", type=int, default=1)
    o.add_argument("--json", action="store_true", help="accepted for uniformity; output is always JSON")
    o.set_defaults(func=cmd_oracle)

    v = sub.add_parser("verify", help="run self-check suites")
    v.add_argument("suite", choices=["p3", "pl", "trees", "eg", "all"])
    v.add_argument("--n-max", type=int)
    v.add_argument("--k", type=int)
    v.add_argument("--l", type=int)
    v.add_argument("--max-vertices", type=int, default=12)
    v.add_argument("--threads", type=int, default=1)
    v.add_argument("--json", action="store_true")
    v.set_defaults(func=cmd_verify)
    return ap


def main(argv: Optional[Sequence[str]] = None) -> int:
    ap = build_parser()
    a = ap.parse_args(argv)
    needs = getattr(a, "needs", {}).get(getattr(a, "subject", None) or getattr(a, "family", None), "")
    for flag in needs:
        name = {"k": "k", "l": "l", "h": "h"}[flag]
        if getattr(a, name) is None:
            print(f"error: {a.command} {getattr(a, 'subject', None) or a.family} needs --{name}", file=sys.stderr)
            return 2
    try:
        return a.func(a)
    except (GraphError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
