"""Exact containment tests for the forbidden configurations.

Patterns are k vertex-disjoint paths, a single path, or an explicit forest.
Containment is ordinary (not induced) subgraph containment.

Both searches lean on the same two facts:

* Twins of ``G[avail]`` (vertices with equal neighbourhoods apart from each
  other) can be swapped by an automorphism that fixes everything else, so
  whenever a search step may pick any member of a twin class it only tries
  the lowest-indexed one.
* If ``I`` is an independent set, every copy of a tree ``T`` has at least
  ``|T| - alpha(T)`` vertices outside ``I``; if ``I`` induces maximum degree
  one the same holds with the dissociation number.  Greedy choices of ``I``
  give cheap infeasibility bounds that settle the extremal constructions at
  the root.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from itertools import combinations
from typing import Optional

import numpy as np

from .graph import Graph, GraphError, bits, from_edges, mask_of, path as path_graph

__all__ = [
    "PatternSpec",
    "Witness",
    "longest_path",
    "contains_pattern",
    "find_pattern",
    "common_neighborhood",
    "find_high_codegree_subset",
    "build_codegree_hypergraph",
    "flatten",
    "is_intersecting",
    "is_pattern_free_certificate",
    "enumerate_path_vertex_sets",
    "DEFAULT_MEMO_LIMIT",
    "DEFAULT_COPY_CAP",
]

DEFAULT_MEMO_LIMIT = 2_000_000  # memo entries, roughly 200 bytes each
DEFAULT_COPY_CAP = 100_000
DP_LIMIT = 24
_PY_DP_LIMIT = 14


# ---------------------------------------------------------------------------
# pattern description


@dataclass(frozen=True)
class PatternSpec:
    """A forbidden configuration.

    ``kind`` is ``"k_disjoint_paths"`` (``k`` copies of ``P_l``),
    ``"single_path"`` (``P_l``) or ``"forest"`` (the acyclic graph ``forest``).
    """

    kind: str
    k: int = 1
    l: int = 0
    forest: Optional[Graph] = None

    def __post_init__(self):
        if self.kind in ("k_disjoint_paths", "single_path"):
            if self.k < 1:
                raise GraphError(f"need k >= 1, got {self.k}")
            if self.l < 1:
                raise GraphError(f"need l >= 1, got {self.l}")
            if self.kind == "single_path" and self.k != 1:
                raise GraphError("single_path has k = 1")
        elif self.kind == "forest":
            if self.forest is None or not self.forest.is_forest():
                raise GraphError("forest pattern must be an acyclic graph")
        else:
            raise GraphError(f"unknown pattern kind {self.kind!r}")

    @classmethod
    def paths(cls, k: int, l: int) -> PatternSpec:
        return cls("single_path", 1, l) if k == 1 else cls("k_disjoint_paths", k, l)

    @classmethod
    def single_path(cls, l: int) -> PatternSpec:
        return cls("single_path", 1, l)

    @classmethod
    def of_forest(cls, h: Graph) -> PatternSpec:
        return cls("forest", forest=h)

    @property
    def is_paths(self) -> bool:
        return self.kind != "forest"

    @property
    def order(self) -> int:
        return self.k * self.l if self.is_paths else self.forest.n

    def components(self) -> list[Graph]:
        """Pattern components, each relabelled to ``0..size-1``."""
        if self.is_paths:
            return [path_graph(self.l)] * self.k
        from .graph import induced_subgraph

        return [induced_subgraph(self.forest, c) for c in self.forest.components()]

    def __str__(self) -> str:
        if self.kind == "single_path":
            return f"P{self.l}"
        if self.kind == "k_disjoint_paths":
            return f"{self.k}*P{self.l}"
        return f"forest(n={self.forest.n}, m={self.forest.m})"


@dataclass(frozen=True)
class Witness:
    """Images of the pattern components.

    For path patterns each entry lists the path's vertices in order.  For a
    forest, ``parts[i][j]`` is the image of vertex ``j`` of component ``i``
    (components as returned by :meth:`PatternSpec.components`).
    """

    parts: tuple[tuple[int, ...], ...] = field(default_factory=tuple)

    def vertices(self) -> list[int]:
        return [v for p in self.parts for v in p]

    def verify(self, g: Graph, p: PatternSpec) -> bool:
        flat = self.vertices()
        if len(flat) != len(set(flat)) or any(not 0 <= v < g.n for v in flat):
            return False
        comps = p.components()
        if len(self.parts) != len(comps):
            return False
        for part, comp in zip(self.parts, comps):
            if len(part) != comp.n:
                return False
            for a, b in comp.edges():
                if not g.has_edge(part[a], part[b]):
                    return False
        return True


# ---------------------------------------------------------------------------
# shared helpers


def _twin_classes(adj: Sequence[int], avail: int) -> dict[int, int]:
    """Map each vertex of ``avail`` to the bitmask of its twin class in ``G[avail]``."""
    open_groups: dict[int, int] = {}
    closed_groups: dict[int, int] = {}
    for v in bits(avail):
        b = 1 << v
        row = adj[v] & avail
        open_groups[row] = open_groups.get(row, 0) | b
        closed_groups[row | b] = closed_groups.get(row | b, 0) | b
    cls = {}
    for v in bits(avail):
        b = 1 << v
        row = adj[v] & avail
        o = open_groups[row]
        cls[v] = o if o != b else closed_groups[row | b]
    return cls


def _reduce(cand: int, cls: dict[int, int]) -> int:
    """Keep only the lowest candidate of each twin class."""
    out = 0
    while cand:
        low = cand & -cand
        out |= low
        cand &= ~cls[low.bit_length() - 1]
    return out


def _tree_numbers(t: Graph) -> tuple[int, int]:
    """Independence and dissociation numbers of a forest."""
    if t.n == 0:
        return 0, 0
    alpha = diss = 0
    for comp in t.components():
        root = (comp & -comp).bit_length() - 1
        order, parent = [root], {root: -1}
        for v in order:
            for u in bits(t.adj[v]):
                if u not in parent:
                    parent[u] = v
                    order.append(u)
        a0, a1, f0, f1, f2 = {}, {}, {}, {}, {}
        for v in reversed(order):
            kids = [u for u in bits(t.adj[v]) if parent.get(u) == v]
            a0[v] = sum(max(a0[c], a1[c]) for c in kids)
            a1[v] = 1 + sum(a0[c] for c in kids)
            base = sum(f0[c] for c in kids)
            f0[v] = sum(max(f0[c], f1[c], f2[c]) for c in kids)
            f1[v] = 1 + base
            f2[v] = 1 + base + max(f1[c] - f0[c] for c in kids) if kids else -1
        alpha += max(a0[root], a1[root])
        diss += max(f0[root], f1[root], f2[root])
    return alpha, diss


def _cover_bounds_ok(adj: Sequence[int], avail: int, need_indep: int, need_diss: int) -> bool:
    """False when a greedy independent / degree-one set proves infeasibility."""
    if need_indep <= 0 and need_diss <= 0:
        return True
    verts = sorted(bits(avail), key=lambda v: ((adj[v] & avail).bit_count(), v))
    size = len(verts)
    if need_indep > 0:
        ind = 0
        blocked = 0
        for v in verts:
            if not blocked >> v & 1:
                ind |= 1 << v
                blocked |= adj[v] | (1 << v)
        if size - ind.bit_count() < need_indep:
            return False
    if need_diss > 0:
        s = 0
        for v in verts:
            nb = adj[v] & s
            c = nb.bit_count()
            if c == 0 or (c == 1 and not adj[nb.bit_length() - 1] & s):
                s |= 1 << v
        if size - s.bit_count() < need_diss:
            return False
    return True


def _component_masks(adj: Sequence[int], avail: int) -> list[int]:
    comps = []
    rest = avail
    while rest:
        comp = frontier = rest & -rest
        while frontier:
            nxt = 0
            for u in bits(frontier):
                nxt |= adj[u]
            frontier = nxt & avail & ~comp
            comp |= frontier
        comps.append(comp)
        rest &= ~comp
    return comps


# ---------------------------------------------------------------------------
# longest path


def _longest_dp_small(adj: Sequence[int], verts: list[int]) -> list[int]:
    s = len(verts)
    idx = {v: i for i, v in enumerate(verts)}
    ladj = [mask_of(idx[u] for u in bits(adj[v]) if u in idx) for v in verts]
    dp = [0] * (1 << s)
    best_mask, best_end = 1, 0
    for i in range(s):
        dp[1 << i] = 1 << i
    for mask in range(1, 1 << s):
        ends = dp[mask]
        if not ends:
            continue
        if mask.bit_count() > best_mask.bit_count():
            best_mask, best_end = mask, (ends & -ends).bit_length() - 1
        for e in bits(ends):
            for w in bits(ladj[e] & ~mask):
                dp[mask | 1 << w] |= 1 << w
    return _rebuild_path(dp, ladj, best_mask, best_end, verts)


def _longest_dp_numpy(adj: Sequence[int], verts: list[int]) -> list[int]:
    s = len(verts)
    idx = {v: i for i, v in enumerate(verts)}
    ladj = [mask_of(idx[u] for u in bits(adj[v]) if u in idx) for v in verts]
    size = 1 << s
    dp = np.zeros(size, dtype=np.uint32)
    masks = np.arange(size, dtype=np.uint32)
    pop = np.zeros(size, dtype=np.uint8)
    for i in range(s):
        pop += ((masks >> i) & 1).astype(np.uint8)
    layers = [np.nonzero(pop == c)[0].astype(np.uint32) for c in range(s + 1)]
    for i in range(s):
        dp[1 << i] = 1 << i
    best = 1
    for c in range(2, s + 1):
        layer = layers[c]
        for w in range(s):
            sel = layer[(layer >> w) & 1 == 1]
            prev = dp[sel ^ np.uint32(1 << w)]
            hit = (prev & np.uint32(ladj[w])) != 0
            dp[sel[hit]] |= np.uint32(1 << w)
        if np.any(dp[layer]):
            best = c
        else:
            break
    cand = layers[best]
    mask = int(cand[np.nonzero(dp[cand])[0][0]])
    ends = int(dp[mask])
    end = (ends & -ends).bit_length() - 1
    return _rebuild_path(dp, ladj, mask, end, verts)


def _rebuild_path(dp, ladj, mask: int, end: int, verts: list[int]) -> list[int]:
    seq = [end]
    while mask.bit_count() > 1:
        mask ^= 1 << end
        ends = int(dp[mask]) & ladj[end]
        end = (ends & -ends).bit_length() - 1
        seq.append(end)
    return [verts[i] for i in seq]


def _longest_dfs(adj: Sequence[int], comp: int, floor: int) -> list[int]:
    """Branch and bound over simple paths in one component; beats ``floor`` or returns []."""
    size = comp.bit_count()
    cls = _twin_classes(adj, comp)
    best: list[int] = []
    best_len = floor

    def reach(start: int, free: int) -> int:
        seen = frontier = 1 << start
        while frontier:
            nxt = 0
            for u in bits(frontier):
                nxt |= adj[u]
            frontier = nxt & free & ~seen
            seen |= frontier
        return seen.bit_count() - 1

    def extend(seq: list[int], used: int) -> bool:
        nonlocal best, best_len
        if len(seq) > best_len:
            best, best_len = list(seq), len(seq)
            if best_len == size:
                return True
        end = seq[-1]
        free = comp & ~used
        if len(seq) + reach(end, free) <= best_len:
            return False
        cand = _reduce(adj[end] & free, cls)
        # low-degree continuations first: they tend to be forced
        for w in sorted(bits(cand), key=lambda x: (adj[x] & free).bit_count()):
            seq.append(w)
            if extend(seq, used | 1 << w):
                return True
            seq.pop()
        return False

    starts = _reduce(comp, cls)
    for s in sorted(bits(starts), key=lambda x: ((adj[x] & comp).bit_count(), x)):
        if extend([s], 1 << s):
            break
    return best


def longest_path(g: Graph) -> tuple[int, tuple[int, ...]]:
    """Number of vertices on a longest path of ``g`` and one such path.

    Components of at most 24 vertices use subset dynamic programming; larger
    components use depth-first branch and bound with reachability pruning.
    """
    if g.n == 0:
        return 0, ()
    best: list[int] = []
    comps = sorted(_component_masks(g.adj, g.vertex_mask), key=lambda c: -c.bit_count())
    for comp in comps:
        s = comp.bit_count()
        if s <= len(best):
            break
        verts = list(bits(comp))
        if s <= _PY_DP_LIMIT:
            cand = _longest_dp_small(g.adj, verts)
        elif s <= DP_LIMIT:
            cand = _longest_dp_numpy(g.adj, verts)
        else:
            cand = _longest_dfs(g.adj, comp, len(best))
        if len(cand) > len(best):
            best = cand
    return len(best), tuple(best)


# ---------------------------------------------------------------------------
# disjoint path packing


def _paths_through(adj: Sequence[int], avail: int, v: int, l: int, cls: dict[int, int]) -> dict[int, list[int]]:
    """Vertex sets of twin-canonical ``P_l`` copies in ``G[avail]`` containing ``v``."""
    found: dict[int, list[int]] = {}

    def grow_left(seq: list[int], used: int, need: int) -> None:
        if need == 0:
            found.setdefault(used, list(seq))
            return
        head = seq[0]
        for w in bits(_reduce(adj[head] & avail & ~used, cls)):
            seq.insert(0, w)
            grow_left(seq, used | 1 << w, need - 1)
            seq.pop(0)

    def grow_right(seq: list[int], used: int) -> None:
        right = len(seq) - 1
        # v at the left end for right == l-1; otherwise finish leftwards
        grow_left(seq, used, l - 1 - right)
        if right == l - 1:
            return
        tail = seq[-1]
        for w in bits(_reduce(adj[tail] & avail & ~used, cls)):
            seq.append(w)
            grow_right(seq, used | 1 << w)
            seq.pop()

    grow_right([v], 1 << v)
    return found


class _PathPacker:
    def __init__(self, adj: Sequence[int], l: int, memo_limit: int):
        self.adj = adj
        self.l = l
        self.memo: set[tuple[int, int]] = set()
        self.memo_limit = memo_limit
        self.need_indep = l // 2
        self.need_diss = l // 3

    def feasible_bounds(self, avail: int, k: int) -> bool:
        l = self.l
        if avail.bit_count() < k * l:
            return False
        comps = _component_masks(self.adj, avail)
        if sum(c.bit_count() // l for c in comps) < k:
            return False
        return _cover_bounds_ok(self.adj, avail, k * self.need_indep, k * self.need_diss)

    def search(self, avail: int, k: int) -> Optional[list[list[int]]]:
        if k == 0:
            return []
        key = (avail, k)
        if key in self.memo:
            return None
        result = self._search(avail, k)
        if result is None and len(self.memo) < self.memo_limit:
            self.memo.add(key)
        return result

    def _search(self, avail: int, k: int) -> Optional[list[list[int]]]:
        adj, l = self.adj, self.l
        # vertices too poorly connected to lie on any P_l are dropped first
        isolated = 0
        for v in bits(avail):
            if not adj[v] & avail:
                isolated |= 1 << v
        avail &= ~isolated
        if not self.feasible_bounds(avail, k):
            return None
        v = min(bits(avail), key=lambda x: ((adj[x] & avail).bit_count(), x))
        cls = _twin_classes(adj, avail)
        for used, seq in _paths_through(adj, avail, v, l, cls).items():
            rest = self.search(avail & ~used, k - 1)
            if rest is not None:
                return [seq] + rest
        # v lies on no path of some packing, hence neither does any twin of v
        return self.search(avail & ~cls[v], k)


def _pack_paths(g: Graph, k: int, l: int, avail: Optional[int] = None, memo_limit: int = DEFAULT_MEMO_LIMIT):
    avail = g.vertex_mask if avail is None else avail
    if l == 1:
        if avail.bit_count() < k:
            return None
        vs = list(bits(avail))[:k]
        return [[v] for v in vs]
    return _PathPacker(g.adj, l, memo_limit).search(avail, k)


# ---------------------------------------------------------------------------
# forest embedding


@dataclass
class _Tree:
    n: int
    order: list[int]  # pattern vertices in placement order
    parent: list[int]  # parent in placement tree, -1 for the root
    degree: list[int]
    leaf_groups: list[tuple[int, list[int]]]  # (parent, leaves) placed as sets
    need_indep: int
    need_diss: int


def _centroid(t: Graph) -> int:
    n = t.n
    if n <= 2:
        return 0
    order, parent = [0], {0: -1}
    for v in order:
        for u in bits(t.adj[v]):
            if u not in parent:
                parent[u] = v
                order.append(u)
    size = [1] * n
    for v in reversed(order):
        if parent[v] >= 0:
            size[parent[v]] += size[v]
    best, best_w = 0, n + 1
    for v in range(n):
        heaviest = n - size[v]
        for u in bits(t.adj[v]):
            if parent.get(u) == v:
                heaviest = max(heaviest, size[u])
        if heaviest < best_w:
            best, best_w = v, heaviest
    return best


def _prepare_tree(t: Graph) -> _Tree:
    root = _centroid(t)
    bfs, parent = [root], [-1] * t.n
    seen = {root}
    for v in bfs:
        for u in bits(t.adj[v]):
            if u not in seen:
                seen.add(u)
                parent[u] = v
                bfs.append(u)
    deg = t.degrees()
    if t.n <= 2:
        internal, leaves = bfs, []
    else:
        internal = [v for v in bfs if deg[v] > 1 or v == root]
        leaves = [v for v in bfs if deg[v] == 1 and v != root]
    groups: dict[int, list[int]] = {}
    for v in leaves:
        groups.setdefault(parent[v], []).append(v)
    alpha, diss = _tree_numbers(t)
    return _Tree(t.n, internal, parent, deg, sorted(groups.items(), key=lambda kv: internal.index(kv[0])),
                 t.n - alpha, t.n - diss)


class _ForestEmbedder:
    def __init__(self, adj: Sequence[int], comps: list[Graph], memo_limit: int):
        self.adj = adj
        self.trees = [_prepare_tree(c) for c in comps]
        self.memo: set[tuple[int, int]] = set()
        self.memo_limit = memo_limit
        self.suffix_n = [0] * (len(comps) + 1)
        self.suffix_i = [0] * (len(comps) + 1)
        self.suffix_d = [0] * (len(comps) + 1)
        for i in range(len(comps) - 1, -1, -1):
            t = self.trees[i]
            self.suffix_n[i] = self.suffix_n[i + 1] + t.n
            self.suffix_i[i] = self.suffix_i[i + 1] + t.need_indep
            self.suffix_d[i] = self.suffix_d[i + 1] + t.need_diss

    def search(self, i: int, avail: int) -> Optional[list[list[int]]]:
        if i == len(self.trees):
            return []
        key = (i, avail)
        if key in self.memo:
            return None
        res = None
        if avail.bit_count() >= self.suffix_n[i] and _cover_bounds_ok(
            self.adj, avail, self.suffix_i[i], self.suffix_d[i]
        ):
            res = self._place(i, avail)
        if res is None and len(self.memo) < self.memo_limit:
            self.memo.add(key)
        return res

    def _place(self, i: int, avail: int) -> Optional[list[list[int]]]:
        adj, t = self.adj, self.trees[i]
        cls = _twin_classes(adj, avail)
        img = [-1] * t.n

        def place_internal(j: int, used: int) -> Optional[list[list[int]]]:
            if j == len(t.order):
                return place_leaves(0, used)
            x = t.order[j]
            p = t.parent[x]
            cand = (adj[img[p]] if p >= 0 else avail) & avail & ~used
            for w in bits(_reduce(cand, cls)):
                if (adj[w] & avail).bit_count() < t.degree[x]:
                    continue
                img[x] = w
                r = place_internal(j + 1, used | 1 << w)
                if r is not None:
                    return r
            img[x] = -1
            return None

        def place_leaves(gi: int, used: int) -> Optional[list[list[int]]]:
            if gi == len(t.leaf_groups):
                rest = self.search(i + 1, avail & ~used)
                return None if rest is None else [list(img)] + rest
            p, leaves = t.leaf_groups[gi]
            cand = adj[img[p]] & avail & ~used
            if cand.bit_count() < len(leaves):
                return None
            # leaf images matter only up to twin-class counts
            classes = []
            seen = 0
            for w in bits(cand):
                if seen >> w & 1:
                    continue
                members = list(bits(cls[w] & cand))
                seen |= cls[w]
                classes.append(members)
            for chosen in _distribute(classes, len(leaves)):
                for x, w in zip(leaves, chosen):
                    img[x] = w
                r = place_leaves(gi + 1, used | mask_of(chosen))
                if r is not None:
                    return r
            for x in leaves:
                img[x] = -1
            return None

        return place_internal(0, 0)


def _distribute(classes: list[list[int]], count: int):
    """Yield vertex lists taking the lowest members of each class, ``count`` in total."""
    def rec(ci: int, left: int, acc: list[int]):
        if left == 0:
            yield list(acc)
            return
        if ci == len(classes):
            return
        members = classes[ci]
        for take in range(min(left, len(members)), -1, -1):
            acc.extend(members[:take])
            yield from rec(ci + 1, left - take, acc)
            del acc[len(acc) - take:]

    yield from rec(0, count, [])


def _embed_forest(g: Graph, h: Graph, avail: Optional[int] = None, memo_limit: int = DEFAULT_MEMO_LIMIT):
    from .graph import induced_subgraph

    avail = g.vertex_mask if avail is None else avail
    comps = [induced_subgraph(h, c) for c in h.components()]
    order = sorted(range(len(comps)), key=lambda i: (-comps[i].n, -comps[i].m, i))
    res = _ForestEmbedder(g.adj, [comps[i] for i in order], memo_limit).search(0, avail)
    if res is None:
        return None
    parts: list[list[int]] = [[] for _ in comps]
    for slot, i in enumerate(order):
        parts[i] = res[slot]
    return parts


# ---------------------------------------------------------------------------
# public containment API


def find_pattern(g: Graph, p: PatternSpec, *, avail: Optional[int] = None,
                 memo_limit: int = DEFAULT_MEMO_LIMIT) -> Optional[Witness]:
    """A witness embedding of ``p`` in ``g`` (restricted to ``avail``), or None."""
    if avail is None:
        avail = g.vertex_mask
    if p.order > avail.bit_count():
        return None
    if p.is_paths:
        res = _pack_paths(g, p.k, p.l, avail, memo_limit)
    else:
        res = _embed_forest(g, p.forest, avail, memo_limit)
    if res is None:
        return None
    return Witness(tuple(tuple(x) for x in res))


def contains_pattern(g: Graph, p: PatternSpec, **kw) -> bool:
    """True iff ``g`` contains ``p`` as a (not necessarily induced) subgraph."""
    return find_pattern(g, p, **kw) is not None


# ---------------------------------------------------------------------------
# codegree machinery


def common_neighborhood(g: Graph, u: Iterable[int]) -> frozenset[int]:
    """Vertices adjacent to every vertex of ``u`` (``u`` itself excluded)."""
    u = list(u)
    if not u:
        raise GraphError("common neighbourhood of an empty set is undefined")
    acc = g.vertex_mask
    for v in u:
        if not 0 <= v < g.n:
            raise GraphError(f"vertex {v} not in graph")
        acc &= g.adj[v]
    return frozenset(bits(acc & ~mask_of(u)))


def find_high_codegree_subset(g: Graph, copy, t: int) -> tuple[tuple[int, ...], int]:
    """The ``t``-subset of ``copy`` with the largest common neighbourhood.

    ``copy`` is a :class:`Witness` or an iterable of vertices.  Ties go to the
    lexicographically least subset.
    """
    verts = sorted(set(copy.vertices() if isinstance(copy, Witness) else copy))
    if not 1 <= t <= len(verts):
        raise GraphError(f"need 1 <= t <= {len(verts)}, got t={t}")
    best, best_c = None, -1
    for sub in combinations(verts, t):
        c = len(common_neighborhood(g, sub))
        if c > best_c:
            best, best_c = sub, c
    return best, best_c


def enumerate_path_vertex_sets(g: Graph, l: int, cap: Optional[int] = None) -> list[tuple[int, ...]]:
    """Distinct vertex sets of ``P_l`` copies in ``g``, each as an ordered path.

    Stops after ``cap`` sets when given.
    """
    found: dict[int, tuple[int, ...]] = {}
    adj = g.adj

    class _Done(Exception):
        pass

    def grow(seq: list[int], used: int) -> None:
        if len(seq) == l:
            if seq[0] < seq[-1] or l == 1:
                found.setdefault(used, tuple(seq))
                if cap is not None and len(found) >= cap:
                    raise _Done
            return
        for w in bits(adj[seq[-1]] & ~used):
            seq.append(w)
            grow(seq, used | 1 << w)
            seq.pop()

    try:
        for s in range(g.n):
            grow([s], 1 << s)
    except _Done:
        pass
    return list(found.values())


def build_codegree_hypergraph(g: Graph, l: int, threshold: int,
                              max_copies: int = DEFAULT_COPY_CAP) -> list[frozenset[int]]:
    """``floor(l/2)``-uniform hyperedges from high-codegree subsets of ``P_l`` copies.

    Every ``P_l`` copy (up to ``max_copies`` distinct vertex sets) contributes
    its best ``floor(l/2)``-subset when that subset has codegree at least
    ``threshold``.  With the cap in force this realises the construction on a
    sample of copies only.
    """
    if l < 4:
        raise GraphError(f"hypergraph device needs l >= 4, got {l}")
    h = l // 2
    edges: dict[frozenset[int], None] = {}
    for copy in enumerate_path_vertex_sets(g, l, max_copies):
        sub, c = find_high_codegree_subset(g, copy, h)
        if c >= threshold:
            edges.setdefault(frozenset(sub), None)
    return sorted(edges, key=lambda e: sorted(e))


def flatten(hyperedges: Iterable[Iterable[int]], n: int) -> Graph:
    """Simple graph on ``n`` vertices joining every pair inside a common hyperedge."""
    pairs = set()
    for e in hyperedges:
        pairs.update(combinations(sorted(e), 2))
    return from_edges(n, sorted(pairs))


def is_intersecting(hyperedges: Sequence[Iterable[int]]) -> bool:
    sets = [frozenset(e) for e in hyperedges]
    return all(a & b for a, b in combinations(sets, 2))


def is_pattern_free_certificate(g: Graph, p: PatternSpec, cover: Iterable[int]) -> bool:
    """Check that ``cover`` certifies ``g`` is ``p``-free.

    True iff ``g`` minus ``cover`` contains no component of ``p`` and
    ``|cover|`` is smaller than the number of components, so every copy of
    ``p`` would need a distinct cover vertex per component.
    """
    cmask = mask_of(cover)
    if cmask & ~g.vertex_mask:
        raise GraphError("cover contains vertices outside the graph")
    comps = p.components()
    if cmask.bit_count() >= len(comps):
        return False
    rest = g.vertex_mask & ~cmask
    seen: list[Graph] = []
    for c in comps:
        if c in seen:
            continue
        seen.append(c)
        single = PatternSpec.single_path(c.n) if p.is_paths else PatternSpec.of_forest(c)
        if find_pattern(g, single, avail=rest) is not None:
            return False
    return True
