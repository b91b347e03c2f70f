"""Self-checks that pit formulas and constructions against the detectors and the oracle.

Each suite returns a :class:`SuiteResult`; ``passed`` is false iff some
row is a contradiction.  Rows are plain dicts so they serialise to JSON as is.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from . import constructions as C
from . import formulas as F
from .detectors import PatternSpec, contains_pattern
from .oracle import exact_ex, verify_formula_range
from .treelab import (
    enumerate_equibipartite_trees,
    has_perfect_matching,
    nopm_partition,
    unequal_partition_counterexample,
)

__all__ = ["SuiteResult", "suite_p3", "suite_pl", "suite_trees", "suite_eg", "SUITES"]


@dataclass
class SuiteResult:
    name: str
    rows: list = field(default_factory=list)
    failures: int = 0
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return self.failures == 0

    def as_dict(self) -> dict:
        return {"suite": self.name, "passed": self.passed, "failures": self.failures,
                "elapsed": round(self.elapsed, 3), "rows": self.rows}


def suite_p3(n_max: int = 9, k: int = 2, construct_n_max: int = 60, construct_k_max: int = 4,
             threads: int = 1) -> SuiteResult:
    """Oracle against the Gorgol piecewise value, then the k*P3 construction counts."""
    res = SuiteResult("p3")
    t0 = time.monotonic()
    for row in verify_formula_range("k_p3", {"k": k, "gorgol": True}, range(3 * k, n_max + 1), threads=threads):
        d = row.as_dict()
        d["check"] = "oracle"
        res.rows.append(d)
        res.failures += row.contradiction
    for kk in range(1, construct_k_max + 1):
        p = PatternSpec.paths(kk, 3)
        for n in range(3 * kk, construct_n_max + 1):
            g = C.p3_extremal(n, kk)
            want = F.ex_k_p3(n, kk).value
            free = not contains_pattern(g, p)
            ok = free and g.m == want
            res.failures += not ok
            if not ok:
                res.rows.append({"check": "construction", "n": n, "k": kk, "edges": g.m, "formula": want, "free": free})
    res.elapsed = time.monotonic() - t0
    return res


def suite_pl(n_max: int = 60, ks=(2, 3), ls=(4, 5, 6), oracle_n_max: int = 9, threads: int = 1) -> SuiteResult:
    """k*P_l construction: formula edge count, detector freeness, and oracle >= construction."""
    res = SuiteResult("pl")
    t0 = time.monotonic()
    for k in ks:
        for l in ls:
            p = PatternSpec.paths(k, l)
            lo = k * (l // 2) + 1
            for n in range(lo, n_max + 1):
                g = C.pl_extremal(n, k, l)
                want = F.ex_k_pl(n, k, l).value
                free = not contains_pattern(g, p)
                ok = free and g.m == want
                row = {"check": "construction", "n": n, "k": k, "l": l, "edges": g.m, "formula": want, "free": free}
                if n <= oracle_n_max:
                    rep = exact_ex(n, p, threads=threads)
                    row["oracle"] = rep.max_edges
                    row["oracle_complete"] = rep.complete
                    row["relation"] = "=" if rep.max_edges == want else (">" if rep.max_edges > want else "<")
                    ok = ok and (not rep.complete or rep.max_edges >= g.m)
                res.failures += not ok
                if not ok or n <= oracle_n_max:
                    res.rows.append(row)
    res.elapsed = time.monotonic() - t0
    return res


def suite_trees(max_vertices: int = 12) -> SuiteResult:
    """Both matching lemmas over every equibipartite tree up to ``max_vertices``."""
    res = SuiteResult("trees")
    t0 = time.monotonic()
    for two_l in range(2, max_vertices + 1, 2):
        count = pm = bad = 0
        for t in enumerate_equibipartite_trees(two_l):
            count += 1
            if has_perfect_matching(t):
                pm += 1
                bad += unequal_partition_counterexample(t) is not None
            else:
                bad += bool(nopm_partition(t).check(t))
        res.failures += bad
        res.rows.append({"vertices": two_l, "trees": count, "with_pm": pm, "failures": bad})
    res.elapsed = time.monotonic() - t0
    return res


def suite_eg(ls=(4, 5, 6, 7), n_max: int = 10, threads: int = 1) -> SuiteResult:
    """ex(n, P_l) <= floor((l-2)n/2), with equality when (l-1) divides n."""
    res = SuiteResult("eg")
    t0 = time.monotonic()
    for l in ls:
        p = PatternSpec.single_path(l)
        for n in range(l - 1, n_max + 1):
            rep = exact_ex(n, p, threads=threads)
            bound = F.erdos_gallai_bound(n, l).value
            tight = n % (l - 1) == 0
            ok = rep.complete and rep.max_edges <= bound and (not tight or rep.max_edges == bound)
            res.failures += not ok
            res.rows.append({"l": l, "n": n, "oracle": rep.max_edges, "bound": bound, "tight_expected": tight,
                             "complete": rep.complete, "ok": ok})
    res.elapsed = time.monotonic() - t0
    return res


SUITES = {"p3": suite_p3, "pl": suite_pl, "trees": suite_trees, "eg": suite_eg}
