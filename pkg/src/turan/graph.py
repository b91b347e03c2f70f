"""Immutable simple graphs stored as per-vertex neighbour bitmasks.

Vertex ``i`` is bit ``1 << i``.  Every constructor and operator returns a new
:class:`Graph`; nothing mutates one in place.
"""

from __future__ import annotations

import os
from collections.abc import Iterable, Iterator

__all__ = [
    "Graph",
    "GraphError",
    "CapExceeded",
    "vertex_cap",
    "complete",
    "empty",
    "matching",
    "path",
    "star",
    "disjoint_union",
    "join",
    "turan_graph",
    "induced_subgraph",
    "from_edges",
    "bits",
    "mask_of",
]

DEFAULT_CAP = 512


class GraphError(ValueError):
    """Invalid graph construction or domain violation."""


class CapExceeded(GraphError):
    pass


def vertex_cap() -> int:
    """Current hard cap on vertex count (``TURAN_VERTEX_CAP`` overrides)."""
    raw = os.environ.get("TURAN_VERTEX_CAP")
    if raw is None:
        return DEFAULT_CAP
    try:
        cap = int(raw)
    except ValueError:
        raise GraphError(f"TURAN_VERTEX_CAP must be an integer, got {raw!r}") from None
    if cap < 0:
        raise GraphError("TURAN_VERTEX_CAP must be nonnegative")
    return cap


def _check_cap(n: int) -> None:
    cap = vertex_cap()
    if n > cap:
        raise CapExceeded(f"{n} vertices exceeds the vertex cap of {cap}")


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


class Graph:
    """A simple undirected graph on vertices ``0..n-1``.

    ``adj[v]`` is the neighbour set of ``v`` encoded as an integer bitmask.
    Instances are hashable and compare equal only when labelled identically.
    """

    __slots__ = ("n", "adj", "m")

    def __init__(self, n: int, adj: Iterable[int], *, validate: bool = True):
        adj = tuple(adj)
        if n < 0:
            raise GraphError("vertex count must be nonnegative")
        _check_cap(n)
        if len(adj) != n:
            raise GraphError(f"expected {n} adjacency rows, got {len(adj)}")
        if validate:
            full = (1 << n) - 1
            for v, row in enumerate(adj):
                if row & ~full or row < 0:
                    raise GraphError(f"vertex {v} has a neighbour outside 0..{n - 1}")
                if row >> v & 1:
                    raise GraphError(f"self-loop at vertex {v}")
                for u in bits(row):
                    if not adj[u] >> v & 1:
                        raise GraphError(f"asymmetric adjacency between {v} and {u}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "adj", adj)
        object.__setattr__(self, "m", sum(r.bit_count() for r in adj) // 2)

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"

    def __reduce__(self):
        return (_rebuild, (self.n, self.adj))

    # -- queries --------------------------------------------------------

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [r.bit_count() for r in self.adj]

    def neighbors(self, v: int) -> list[int]:
        return list(bits(self.adj[v]))

    def edges(self) -> list[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v`` in ascending lexicographic order."""
        out = []
        for u, row in enumerate(self.adj):
            for v in bits(row >> (u + 1)):
                out.append((u, u + 1 + v))
        return out

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    def components(self) -> list[int]:
        """Connected components as vertex bitmasks, ordered by lowest vertex."""
        seen = 0
        comps = []
        for v in range(self.n):
            if seen >> v & 1:
                continue
            comp = frontier = 1 << v
            while frontier:
                nxt = 0
                for u in bits(frontier):
                    nxt |= self.adj[u]
                frontier = nxt & ~comp
                comp |= frontier
            seen |= comp
            comps.append(comp)
        return comps

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.components()) == 1

    def is_forest(self) -> bool:
        return self.m == self.n - len(self.components())

    def add_edge(self, u: int, v: int) -> Graph:
        if u == v:
            raise GraphError("self-loop")
        adj = list(self.adj)
        adj[u] |= 1 << v
        adj[v] |= 1 << u
        return Graph(self.n, adj, validate=False)

    def remove_edge(self, u: int, v: int) -> Graph:
        adj = list(self.adj)
        adj[u] &= ~(1 << v)
        adj[v] &= ~(1 << u)
        return Graph(self.n, adj, validate=False)

    def relabel(self, perm: list[int]) -> Graph:
        """Graph with vertex ``v`` renamed to ``perm[v]``."""
        adj = [0] * self.n
        for v, row in enumerate(self.adj):
            r = 0
            for u in bits(row):
                r |= 1 << perm[u]
            adj[perm[v]] = r
        return Graph(self.n, adj, validate=False)


def _rebuild(n, adj):
    return Graph(n, adj, validate=False)


def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    adj = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
        if u == v:
            raise GraphError(f"self-loop at vertex {u}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, adj, validate=False)


def _need(t: int, what: str = "t") -> None:
    if t < 0:
        raise GraphError(f"{what} must be nonnegative, got {t}")


def complete(t: int) -> Graph:
    _need(t)
    _check_cap(t)
    full = (1 << t) - 1
    return Graph(t, [full & ~(1 << v) for v in range(t)], validate=False)


def empty(t: int) -> Graph:
    _need(t)
    _check_cap(t)
    return Graph(t, [0] * t, validate=False)


def matching(t: int) -> Graph:
    """``floor(t/2)`` independent edges (0,1), (2,3), ... on ``t`` vertices."""
    _need(t)
    _check_cap(t)
    return from_edges(t, [(i, i + 1) for i in range(0, t - 1, 2)])


def path(l: int) -> Graph:
    if l < 1:
        raise GraphError(f"a path needs at least one vertex, got {l}")
    _check_cap(l)
    return from_edges(l, [(i, i + 1) for i in range(l - 1)])


def star(leaves: int) -> Graph:
    """K_{1,leaves} with the centre at vertex 0."""
    _need(leaves, "leaves")
    return from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def disjoint_union(g: Graph, h: Graph) -> Graph:
    _check_cap(g.n + h.n)
    shift = g.n
    return Graph(g.n + h.n, g.adj + tuple(r << shift for r in h.adj), validate=False)


def join(g: Graph, h: Graph) -> Graph:
    _check_cap(g.n + h.n)
    shift = g.n
    h_all = ((1 << h.n) - 1) << shift
    g_all = (1 << g.n) - 1
    adj = [r | h_all for r in g.adj] + [(r << shift) | g_all for r in h.adj]
    return Graph(g.n + h.n, adj, validate=False)


def turan_graph(r: int, n: int) -> Graph:
    """Complete ``r``-partite graph on ``n`` vertices with balanced classes.

    Classes are contiguous index blocks; the first ``n mod r`` are the larger.
    """
    if r < 1:
        raise GraphError(f"class count must be at least 1, got {r}")
    _need(n, "n")
    _check_cap(n)
    q, extra = divmod(n, r)
    full = (1 << n) - 1
    adj = [0] * n
    start = 0
    for i in range(r):
        size = q + (1 if i < extra else 0)
        block = ((1 << size) - 1) << start
        for v in range(start, start + size):
            adj[v] = full & ~block
        start += size
    return Graph(n, adj, validate=False)


def induced_subgraph(g: Graph, s: Iterable[int] | int) -> Graph:
    """Subgraph induced on ``s`` (an iterable or a bitmask), relabelled in ascending order."""
    verts = list(bits(s)) if isinstance(s, int) else sorted(set(s))
    for v in verts:
        if not 0 <= v < g.n:
            raise GraphError(f"vertex {v} not in graph on {g.n} vertices")
    pos = {v: i for i, v in enumerate(verts)}
    sel = mask_of(verts)
    adj = []
    for v in verts:
        r = 0
        for u in bits(g.adj[v] & sel):
            r |= 1 << pos[u]
        adj.append(r)
    return Graph(len(verts), adj, validate=False)

