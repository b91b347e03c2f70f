"""Equibipartite trees and forests, perfect matchings and Hall-violator certificates.

A tree is equibipartite when its two colour classes have equal size; a
forest is equibipartite when each of its components is.  For such a tree on
``2l`` vertices:

* with a perfect matching, every split of the vertices into two classes of
  different sizes leaves an edge inside the larger class
  (:func:`check_all_unequal_partitions`);
* without one, :func:`nopm_partition` builds a split where the larger class is
  independent and the smaller one spans exactly one edge, starting from a
  minimal Hall violator.
"""

from __future__ import annotations

import heapq
import random
from collections.abc import Iterator
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import NamedTuple, Optional

from .canon import canonical_code
from .formulas import DomainError
from .graph import Graph, bits, from_edges, induced_subgraph, mask_of

__all__ = [
    "Bipartition",
    "PartitionCert",
    "NotBipartiteError",
    "NotAForestError",
    "NotEquibipartiteError",
    "SingleComponentError",
    "HasPerfectMatchingError",
    "ProofStepError",
    "bipartition",
    "is_equibipartite",
    "maximum_matching",
    "has_perfect_matching",
    "perfect_matching",
    "hall_violator",
    "nopm_partition",
    "unequal_partition_counterexample",
    "check_all_unequal_partitions",
    "enumerate_trees",
    "enumerate_equibipartite_trees",
    "random_equibipartite_tree",
    "prufer_to_tree",
    "ForestInfo",
    "validate_forest",
    "ENUMERATION_CAP",
    "PARTITION_CAP",
]

ENUMERATION_CAP = 14
PARTITION_CAP = 11
EXACT_VIOLATOR_SIDE = 16


class NotBipartiteError(DomainError):
    pass


class NotAForestError(DomainError):
    pass


class NotEquibipartiteError(DomainError):
    pass


class SingleComponentError(DomainError):
    pass


class HasPerfectMatchingError(DomainError):
    pass


class ProofStepError(RuntimeError):
    """A structural claim of the no-perfect-matching construction failed at runtime."""


@dataclass(frozen=True)
class Bipartition:
    side_a: frozenset[int]
    side_b: frozenset[int]

    def side_of(self, v: int) -> frozenset[int]:
        return self.side_a if v in self.side_a else self.side_b


@dataclass(frozen=True)
class PartitionCert:
    small_class: frozenset[int]
    large_class: frozenset[int]
    small_edge: tuple[int, int]

    def check(self, t: Graph) -> list[str]:
        """Names of violated invariants (empty when the certificate is valid)."""
        problems = []
        small, large = mask_of(self.small_class), mask_of(self.large_class)
        if small & large or (small | large) != t.vertex_mask:
            problems.append("classes do not partition V")
        if not len(self.small_class) < len(self.large_class):
            problems.append("|small| >= |large|")
        if induced_subgraph(t, large).m != 0:
            problems.append("large class induces an edge")
        inner = induced_subgraph(t, small)
        if inner.m != 1:
            problems.append(f"small class induces {inner.m} edges")
        u, v = self.small_edge
        if not (u in self.small_class and v in self.small_class and t.has_edge(u, v)):
            problems.append("small_edge is not an edge inside the small class")
        if not 2 * len(self.small_class) < t.n:
            problems.append("|small| >= l")
        return problems


def _two_color(g: Graph, start: int) -> dict[int, int]:
    color = {start: 0}
    queue = [start]
    for v in queue:
        for u in bits(g.adj[v]):
            if u not in color:
                color[u] = 1 - color[v]
                queue.append(u)
            elif color[u] == color[v]:
                raise NotBipartiteError(f"odd cycle through edge ({v}, {u})")
    return color


def bipartition(t: Graph) -> Bipartition:
    """2-colouring by breadth-first layers from vertex 0 (which lands in ``side_a``)."""
    if t.n == 0:
        raise DomainError("empty graph has no bipartition to speak of")
    color = _two_color(t, 0)
    if len(color) != t.n:
        raise DomainError("bipartition expects a connected graph")
    a = frozenset(v for v, c in color.items() if c == 0)
    return Bipartition(a, frozenset(range(t.n)) - a)


def _component_sides(f: Graph) -> list[tuple[int, int]]:
    out = []
    for comp in f.components():
        color = _two_color(f, (comp & -comp).bit_length() - 1)
        zeros = sum(1 for c in color.values() if c == 0)
        out.append((zeros, len(color) - zeros))
    return out


def is_equibipartite(f: Graph) -> bool:
    if not f.is_forest():
        raise NotAForestError("graph contains a cycle")
    return all(a == b for a, b in _component_sides(f))


def maximum_matching(g: Graph) -> dict[int, int]:
    """Maximum matching as a symmetric mate map.

    Bipartite inputs use augmenting paths from each vertex of colour 0;
    anything else falls back to Edmonds' blossom algorithm via networkx.
    """
    try:
        color: dict[int, int] = {}
        for comp in g.components():
            color.update(_two_color(g, (comp & -comp).bit_length() - 1))
    except NotBipartiteError:
        import networkx as nx

        nxg = nx.Graph()
        nxg.add_nodes_from(range(g.n))
        nxg.add_edges_from(g.edges())
        mate = {}
        for u, v in nx.max_weight_matching(nxg, maxcardinality=True):
            mate[u], mate[v] = v, u
        return mate
    left = [v for v in range(g.n) if color[v] == 0]
    return _bipartite_matching(g, left)


def _bipartite_matching(g: Graph, left: list[int], allowed_right: Optional[int] = None) -> dict[int, int]:
    mate: dict[int, int] = {}
    right_ok = g.vertex_mask if allowed_right is None else allowed_right

    def augment(u: int, seen: set[int]) -> bool:
        for w in bits(g.adj[u] & right_ok):
            if w in seen:
                continue
            seen.add(w)
            if w not in mate or augment(mate[w], seen):
                mate[w], mate[u] = u, w
                return True
        return False

    for u in left:
        augment(u, set())
    return mate


def perfect_matching(f: Graph) -> Optional[list[tuple[int, int]]]:
    mate = maximum_matching(f)
    if len(mate) != f.n:
        return None
    return sorted((u, v) for u, v in mate.items() if u < v)


def has_perfect_matching(f: Graph) -> bool:
    return perfect_matching(f) is not None


def _violator_within(g: Graph, side: list[int], other: int) -> Optional[frozenset[int]]:
    """A Hall violator inside ``side`` (neighbours counted in ``other``), or None."""
    mate = _bipartite_matching(g, side, other)
    free = [u for u in side if u not in mate]
    if not free:
        return None
    side_set = set(side)
    reached = {free[0]}
    queue = [free[0]]
    for u in queue:
        for w in bits(g.adj[u] & other):
            x = mate.get(w)
            if x is not None and x in side_set and x not in reached:
                reached.add(x)
                queue.append(x)
    return frozenset(reached)


def _nbhd(g: Graph, s) -> int:
    acc = 0
    for v in s:
        acc |= g.adj[v]
    return acc


def hall_violator(t: Graph, side: str = "a") -> frozenset[int]:
    """An inclusion-minimal set S on one colour side with |N(S)| < |S|.

    Existence comes from the alternating-path closure of an unsaturated
    vertex under a maximum matching.  On sides of at most
    ``EXACT_VIOLATOR_SIDE`` vertices the smallest violator is returned
    (lexicographically least among those); on larger sides the closure is
    shrunk greedily (highest label first), which is minimal but not
    necessarily smallest.
    """
    bip = bipartition(t)
    if side not in ("a", "b"):
        raise DomainError(f"side must be 'a' or 'b', got {side!r}")
    mine, theirs = (bip.side_a, bip.side_b) if side == "a" else (bip.side_b, bip.side_a)
    other = mask_of(theirs)
    s = _violator_within(t, sorted(mine), other)
    if s is None:
        raise DomainError(f"Hall's condition holds on side {side!r}")
    if len(mine) <= EXACT_VIOLATOR_SIDE:
        # smallest cardinality first, then lexicographic: such a set is automatically minimal
        for size in range(1, len(s) + 1):
            for sub in combinations(sorted(mine), size):
                if (_nbhd(t, sub) & other).bit_count() < size:
                    return frozenset(sub)
    shrunk = True
    while shrunk:
        shrunk = False
        for v in sorted(s, reverse=True):
            inner = _violator_within(t, sorted(s - {v}), other)
            if inner is not None:
                s, shrunk = inner, True
                break
    return s


def nopm_partition(t: Graph) -> PartitionCert:
    """Partition certificate for an equibipartite tree without a perfect matching."""
    if not t.is_forest():
        raise NotAForestError("input contains a cycle")
    if not t.is_connected() or t.n == 0:
        raise DomainError("input is not a tree (disconnected)")
    if not is_equibipartite(t):
        raise NotEquibipartiteError("colour classes differ in size")
    if has_perfect_matching(t):
        raise HasPerfectMatchingError("tree has a perfect matching")
    bip = bipartition(t)
    a = bip.side_a
    s = hall_violator(t, "a")
    n_s = frozenset(bits(_nbhd(t, s))) - s
    if not len(n_s) < len(s):
        raise ProofStepError("violator does not violate Hall's condition")
    if not induced_subgraph(t, s | n_s).is_connected():
        raise ProofStepError("minimal violator with N(S) does not induce a connected graph")
    rest = t.vertex_mask & ~mask_of(s | n_s)
    sub_comps = []
    for comp in induced_subgraph(t, rest).components():
        # map local indices back to original labels
        local = list(bits(rest))
        sub_comps.append(frozenset(local[i] for i in bits(comp)))
    n_mask, s_mask = mask_of(n_s), mask_of(s)
    chosen = None
    for comp in sorted(sub_comps, key=sorted):
        links = [(x, y) for x in sorted(comp) for y in bits(t.adj[x] & n_mask)]
        if len(links) != 1 or any(t.adj[x] & s_mask for x in comp):
            raise ProofStepError(f"component {sorted(comp)} meets S ∪ N(S) in {len(links)} edges")
        in_a = len(comp & a)
        if len(comp) - in_a > in_a and chosen is None:
            chosen = (comp, links[0])
    if chosen is None:
        raise ProofStepError("no component has more B-vertices than A-vertices")
    comp, (x, y) = chosen
    side_x, side_y = bip.side_of(x), bip.side_of(y)
    small = (comp & side_x) | ((frozenset(range(t.n)) - comp) & side_y)
    cert = PartitionCert(small, frozenset(range(t.n)) - small, (min(x, y), max(x, y)))
    problems = cert.check(t)
    if problems:
        raise ProofStepError("certificate invalid: " + "; ".join(problems))
    return cert


def unequal_partition_counterexample(t: Graph, partition_cap: int = PARTITION_CAP) -> Optional[frozenset[int]]:
    """An edgeless larger class of some unequal split, or None if every larger class has an edge.

    Any independent set with more than half the vertices is such a class, and
    it contains one of exactly ``floor(n/2) + 1`` vertices, so only those
    subsets are scanned (in lexicographic order).
    """
    if t.n > 2 * partition_cap:
        raise DomainError(f"{t.n} vertices exceeds the partition cap of {2 * partition_cap}")
    size = t.n // 2 + 1
    for sub in combinations(range(t.n), size):
        m = mask_of(sub)
        if all(not (t.adj[v] & m) for v in sub):
            return frozenset(sub)
    return None


def check_all_unequal_partitions(t: Graph, partition_cap: int = PARTITION_CAP) -> bool:
    return unequal_partition_counterexample(t, partition_cap) is None


@lru_cache(maxsize=None)
def _trees(n: int) -> tuple[Graph, ...]:
    if n == 1:
        return (Graph(1, [0]),)
    out: dict = {}
    for t in _trees(n - 1):
        for v in range(n - 1):
            child = from_edges(n, t.edges() + [(v, n - 1)])
            out.setdefault(canonical_code(child), child)
    return tuple(out[c] for c in sorted(out))


def enumerate_trees(n: int) -> Iterator[Graph]:
    """One tree per isomorphism class on ``n`` vertices (leaf extension + canonical dedup)."""
    if n < 1:
        raise DomainError(f"need n >= 1, got {n}")
    if n > ENUMERATION_CAP:
        raise DomainError(f"tree enumeration is capped at {ENUMERATION_CAP} vertices")
    yield from _trees(n)


def enumerate_equibipartite_trees(two_l: int) -> Iterator[Graph]:
    if two_l < 2 or two_l % 2:
        raise DomainError(f"need an even vertex count >= 2, got {two_l}")
    for t in enumerate_trees(two_l):
        if is_equibipartite(t):
            yield t


def prufer_to_tree(seq: list[int], n: int) -> Graph:
    if n == 1:
        return Graph(1, [0])
    if n == 2:
        return from_edges(2, [(0, 1)])
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for x in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, x))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves, x)
    edges.append((heapq.heappop(leaves), heapq.heappop(leaves)))
    return from_edges(n, edges)


def random_equibipartite_tree(two_l: int, seed: int) -> Graph:
    """Uniform labelled tree from a random Prüfer sequence, rejected until equibipartite."""
    if two_l < 2 or two_l % 2:
        raise DomainError(f"need an even vertex count >= 2, got {two_l}")
    rng = random.Random(seed)
    while True:
        t = prufer_to_tree([rng.randrange(two_l) for _ in range(two_l - 2)], two_l)
        if is_equibipartite(t):
            return t


class ForestInfo(NamedTuple):
    l: int
    components: int
    has_pm: bool
    smallest_half: int  # l_1, the smallest component half-size


def validate_forest(h: Graph) -> ForestInfo:
    """Check that ``h`` is an equibipartite forest with at least two trees."""
    if not h.is_forest():
        raise NotAForestError("forest pattern contains a cycle")
    sides = _component_sides(h)
    if any(a != b for a, b in sides):
        raise NotEquibipartiteError("some component has unequal colour classes")
    if len(sides) < 2:
        raise SingleComponentError("forest must consist of at least two trees (single component)")
    return ForestInfo(h.n // 2, len(sides), has_perfect_matching(h), min(a for a, _ in sides))
