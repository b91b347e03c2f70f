"""Canonical labelling by partition refinement and individualisation.

The search refines an ordered vertex partition to an equitable one, then
branches on the vertices of the first smallest non-trivial cell.  Every
discrete leaf yields a relabelled adjacency tuple; the lexicographically
largest one is the certificate.  Two prunings keep symmetric graphs cheap:

* twins (vertices with equal neighbourhoods apart from each other) in the
  target cell are interchangeable, so only one per twin class is tried;
* automorphisms found when two leaves agree prune candidates lying in the
  same orbit of the pointwise stabiliser of the current prefix.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .graph import Graph, bits

__all__ = ["GraphCode", "canonical_code", "canonical_labeling", "canonical_form", "colored_certificate"]


@dataclass(frozen=True, order=True)
class GraphCode:
    """Isomorphism-invariant byte string (graph6 text of the canonical form)."""

    data: bytes

    def __str__(self) -> str:
        return self.data.decode("ascii")

    def to_graph(self) -> Graph:
        from .io import decode

        return decode(self.data, "graph6")


def _refine(adj: Sequence[int], cells: list[list[int]]) -> list[list[int]]:
    while True:
        masks = []
        for c in cells:
            m = 0
            for v in c:
                m |= 1 << v
            masks.append(m)
        out: list[list[int]] = []
        split = False
        for c in cells:
            if len(c) == 1:
                out.append(c)
                continue
            groups: dict[tuple, list[int]] = {}
            for v in c:
                row = adj[v]
                sig = tuple((row & cm).bit_count() for cm in masks)
                groups.setdefault(sig, []).append(v)
            if len(groups) == 1:
                out.append(c)
            else:
                split = True
                for sig in sorted(groups):
                    out.append(groups[sig])
        if not split:
            return out
        cells = out


def _orbits_of_stabilizer(n: int, autos: list[list[int]], prefix: tuple[int, ...]) -> list[int]:
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for perm in autos:
        if any(perm[p] != p for p in prefix):
            continue
        for v in range(n):
            a, b = find(v), find(perm[v])
            if a != b:
                parent[max(a, b)] = min(a, b)
    return [find(v) for v in range(n)]


def _search(n: int, adj: Sequence[int], cells: list[list[int]]):
    best_cert: Optional[tuple] = None
    best_lab: Optional[list[int]] = None
    autos: list[list[int]] = []

    def leaf(lab: list[int]):
        nonlocal best_cert, best_lab
        pos = [0] * n
        for i, v in enumerate(lab):
            pos[v] = i
        rows = []
        for v in lab:
            r = 0
            for u in bits(adj[v]):
                r |= 1 << pos[u]
            rows.append(r)
        cert = tuple(rows)
        if best_cert is None or cert > best_cert:
            best_cert, best_lab = cert, lab
        elif cert == best_cert:
            perm = [0] * n
            for i in range(n):
                perm[best_lab[i]] = lab[i]
            autos.append(perm)

    def visit(cells: list[list[int]], prefix: tuple[int, ...]):
        cells = _refine(adj, cells)
        if len(cells) == n:
            leaf([c[0] for c in cells])
            return
        ti, size = -1, n + 1
        for i, c in enumerate(cells):
            if 1 < len(c) < size:
                ti, size = i, len(c)
        target = sorted(cells[ti])
        reps: list[int] = []
        for v in target:
            bit = 1 << v
            # twins of an earlier representative give isomorphic subtrees
            if not any(adj[v] & ~(1 << u) == adj[u] & ~bit for u in reps):
                reps.append(v)
        done: list[int] = []
        for v in reps:
            if done:
                orb = _orbits_of_stabilizer(n, autos, prefix) if autos else None
                if orb is not None and any(orb[d] == orb[v] for d in done):
                    continue
            child = cells[:ti] + [[v], [u for u in cells[ti] if u != v]] + cells[ti + 1:]
            visit(child, prefix + (v,))
            done.append(v)

    visit(cells, ())
    return best_cert, best_lab, autos


def _initial_cells(n: int, colors: Optional[Sequence[int]]) -> list[list[int]]:
    if colors is None:
        return [list(range(n))] if n else []
    groups: dict[int, list[int]] = {}
    for v in range(n):
        groups.setdefault(colors[v], []).append(v)
    return [groups[c] for c in sorted(groups)]


def canonical_labeling(g: Graph, colors: Optional[Sequence[int]] = None) -> list[int]:
    """Return ``lab`` with ``lab[i]`` the original vertex placed at canonical position ``i``."""
    if g.n == 0:
        return []
    _, lab, _ = _search(g.n, g.adj, _initial_cells(g.n, colors))
    return lab


def colored_certificate(n: int, adj: Sequence[int], colors: Sequence[int]) -> tuple:
    """Certificate of a vertex-coloured graph; equal iff colour-preserving isomorphic."""
    if n == 0:
        return (0,)
    cells = _initial_cells(n, colors)
    cert, _, _ = _search(n, adj, cells)
    sizes = tuple((colors[c[0]], len(c)) for c in cells)
    return (n, sizes, cert)


def canonical_form(g: Graph) -> Graph:
    lab = canonical_labeling(g)
    perm = [0] * g.n
    for i, v in enumerate(lab):
        perm[v] = i
    return g.relabel(perm)


def canonical_code(g: Graph) -> GraphCode:
    from .io import encode

    return GraphCode(encode(canonical_form(g), "graph6"))
