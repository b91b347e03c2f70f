"""Brute-force reference implementations, kept deliberately simple.

Nothing here shares code with the search engines it is used to check:
containment is tested against every labelled copy of the pattern, Turán
numbers come from scanning all ``2^C(n,2)`` labelled graphs, and longest
paths from scanning every vertex permutation.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations, permutations

import numpy as np

from .canon import GraphCode, canonical_code
from .graph import Graph, GraphError, disjoint_union, empty

__all__ = [
    "pattern_graph",
    "pair_index",
    "edge_mask",
    "copy_masks",
    "naive_contains",
    "naive_contains_many",
    "naive_ex",
    "naive_longest_path",
]

NAIVE_EX_CAP = 7


def pattern_graph(p) -> Graph:
    """The pattern as a single graph (disjoint union of its components)."""
    g = empty(0)
    for c in p.components():
        g = disjoint_union(g, c)
    return g


@lru_cache(maxsize=None)
def pair_index(n: int) -> dict[tuple[int, int], int]:
    return {e: i for i, e in enumerate(combinations(range(n), 2))}


def edge_mask(g: Graph) -> int:
    idx = pair_index(g.n)
    out = 0
    for e in g.edges():
        out |= 1 << idx[e]
    return out


def copy_masks(n: int, h: Graph) -> np.ndarray:
    """Edge masks (over the pairs of ``K_n``) of every labelled copy of ``h``."""
    if h.n > n:
        return np.zeros(0, dtype=np.int64)
    idx = pair_index(n)
    he = h.edges()
    seen = set()
    for img in permutations(range(n), h.n):
        m = 0
        for u, v in he:
            a, b = img[u], img[v]
            m |= 1 << idx[(a, b) if a < b else (b, a)]
        seen.add(m)
    return np.array(sorted(seen), dtype=np.int64)


def naive_contains(g: Graph, h: Graph) -> bool:
    gm = edge_mask(g)
    return any(int(c) & gm == int(c) for c in copy_masks(g.n, h))


def naive_contains_many(masks: np.ndarray, copies: np.ndarray, chunk: int = 1 << 22) -> np.ndarray:
    """Vectorised containment: ``out[i]`` iff some copy mask is a subset of ``masks[i]``."""
    out = np.zeros(len(masks), dtype=bool)
    if len(copies) == 0:
        return out
    step = max(1, chunk // len(copies))
    for s in range(0, len(masks), step):
        blk = masks[s:s + step, None]
        out[s:s + step] = ((blk & copies[None, :]) == copies[None, :]).any(axis=1)
    return out


def _popcount(a: np.ndarray) -> np.ndarray:
    a = a.astype(np.uint64)
    c = np.zeros(a.shape, dtype=np.int64)
    while a.any():
        c += (a & np.uint64(1)).astype(np.int64)
        a >>= np.uint64(1)
    return c


def _mask_to_graph(n: int, mask: int) -> Graph:
    pairs = list(combinations(range(n), 2))
    adj = [0] * n
    for i, (u, v) in enumerate(pairs):
        if mask >> i & 1:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
    return Graph(n, adj)


def naive_ex(n: int, h: Graph) -> tuple[int, frozenset[GraphCode]]:
    """ex(n, h) and its extremal classes by scanning every labelled graph on ``n`` vertices."""
    if n > NAIVE_EX_CAP:
        raise GraphError(f"naive enumeration limited to n <= {NAIVE_EX_CAP}")
    e = n * (n - 1) // 2
    bad = np.zeros(1 << e, dtype=bool)
    bad[copy_masks(n, h)] = True
    # close upwards: any supergraph of a graph containing h contains h
    for b in range(e):
        view = bad.reshape(-1, 2, 1 << b)
        view[:, 1, :] |= view[:, 0, :]
    free = np.flatnonzero(~bad)
    if len(free) == 0:
        raise GraphError(f"every graph on {n} vertices contains the pattern")
    counts = _popcount(free)
    top = int(counts.max())
    codes = frozenset(canonical_code(_mask_to_graph(n, int(m))) for m in free[counts == top])
    return top, codes


@lru_cache(maxsize=None)
def _perm_table(n: int) -> np.ndarray:
    return np.array(list(permutations(range(n))), dtype=np.int8).reshape(-1, n)


def naive_longest_path(g: Graph) -> int:
    """Vertex count of a longest path, from every ordering of the vertex set."""
    n = g.n
    if n <= 1:
        return n
    a = np.zeros((n, n), dtype=bool)
    for u, v in g.edges():
        a[u, v] = a[v, u] = True
    perms = _perm_table(n)
    run = np.zeros(len(perms), dtype=np.int64)
    best = 0
    for i in range(n - 1):
        ok = a[perms[:, i], perms[:, i + 1]]
        run = np.where(ok, run + 1, 0)
        best = max(best, int(run.max()))
    return best + 1
