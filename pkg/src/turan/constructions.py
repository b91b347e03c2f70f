"""Extremal and lower-bound graph families for path packings and forests."""

from __future__ import annotations

from .formulas import DomainError
from .graph import Graph, complete, disjoint_union, empty, join, matching

__all__ = [
    "p3_extremal",
    "p3_gorgol_low",
    "pl_extremal",
    "erdos_gallai_extremal",
    "forest_extremal",
    "gorgol_construction",
]


def p3_extremal(n: int, k: int) -> Graph:
    """K_{k-1} + M_{n-k+1}: every P3 meets the clique, so no k disjoint P3."""
    if k < 1 or n < k:
        raise DomainError(f"need n >= k >= 1, got n={n}, k={k}")
    return join(complete(k - 1), matching(n - k + 1))


def p3_gorgol_low(n: int, k: int) -> Graph:
    """K_{3k-1} ∪ M_{n-3k+1}, the graph behind the low-range Gorgol count.

    Only the edge count C(3k-1, 2) + floor((n-3k+1)/2) is stated in the
    literature; this union is the natural graph realising it.
    """
    if k < 1 or n < 3 * k - 1:
        raise DomainError(f"need n >= 3k-1, got n={n}, k={k}")
    return disjoint_union(complete(3 * k - 1), matching(n - 3 * k + 1))


def pl_extremal(n: int, k: int, l: int) -> Graph:
    """K_t + E_{n-t} with t = k*floor(l/2) - 1, plus one edge in the empty class for odd l.

    The extra edge joins the two lowest-indexed empty-class vertices, ``t``
    and ``t + 1``.
    """
    if k < 2 or l < 4:
        raise DomainError(f"need k >= 2 and l >= 4, got k={k}, l={l}")
    t = k * (l // 2) - 1
    if n < t + 2:
        raise DomainError(f"need n >= k*floor(l/2)+1 = {t + 2}, got n={n}")
    g = join(complete(t), empty(n - t))
    if l % 2:
        g = g.add_edge(t, t + 1)
    return g


def erdos_gallai_extremal(n: int, l: int) -> Graph:
    """floor(n/(l-1)) disjoint copies of K_{l-1} plus a clique on the remainder.

    P_l-free for every n; attains (l-2)n/2 edges only when (l-1) divides n and
    is otherwise just a lower-bound construction.
    """
    if l < 2:
        raise DomainError(f"need l >= 2, got {l}")
    if n < 0:
        raise DomainError(f"need n >= 0, got {n}")
    if l == 2:
        return empty(n)
    q, r = divmod(n, l - 1)
    g = empty(0)
    for _ in range(q):
        g = disjoint_union(g, complete(l - 1))
    return disjoint_union(g, complete(r))


def forest_extremal(n: int, h: Graph) -> Graph:
    """K_{l-1} + E_{n-l+1} if ``h`` has a perfect matching, else E_{l-1} + E_{n-l+1}."""
    from .treelab import validate_forest

    info = validate_forest(h)
    l, has_pm = info.l, info.has_pm
    if n < l - 1:
        raise DomainError(f"need n >= l-1 = {l - 1}, got n={n}")
    top = complete(l - 1) if has_pm else empty(l - 1)
    return join(top, empty(n - l + 1))


def gorgol_construction(n: int, k: int, g_extremal: Graph, v: int, which: str) -> Graph:
    """Combine a single-copy extremal graph into a k-copy-free graph.

    ``which="union"`` gives ``g_extremal ∪ K_{kv-1}`` (needs ``n-kv+1``
    vertices in ``g_extremal``); ``which="join"`` gives ``g_extremal + K_{k-1}``
    (needs ``n-k+1``).  The clique comes second in the union and first in the join.
    """
    if k < 1 or v < 1 or n < k * v:
        raise DomainError(f"need k, v >= 1 and n >= kv, got n={n}, k={k}, v={v}")
    if which == "union":
        want = n - k * v + 1
        if g_extremal.n != want:
            raise DomainError(f"union needs a graph on {want} vertices, got {g_extremal.n}")
        return disjoint_union(g_extremal, complete(k * v - 1))
    if which == "join":
        want = n - k + 1
        if g_extremal.n != want:
            raise DomainError(f"join needs a graph on {want} vertices, got {g_extremal.n}")
        return join(complete(k - 1), g_extremal)
    raise DomainError(f"which must be 'union' or 'join', got {which!r}")
