"""Canonical labelling and automorphism orbits for small graphs.

Colour refinement followed by individualisation of the first non-singleton
cell, keeping the lexicographically smallest edge code over all leaves of the
search tree.  No automorphism pruning: graphs here have at most 12 vertices.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .graphs import CombGraph

MAX_CANON_VERTICES = 12


def _refine(adj: list[list[int]], colors: list[int]) -> list[int]:
    """Equitable refinement; colours are ranks of invariant signatures."""
    ncol = len(set(colors))
    while True:
        sigs = [(colors[v], tuple(sorted(colors[w] for w in adj[v]))) for v in range(len(adj))]
        rank = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [rank[s] for s in sigs]
        if len(rank) == ncol:
            return new
        colors, ncol = new, len(rank)


def _homogeneous(adjset: list[set[int]], colors: list[int]) -> bool:
    # every cell is a clique or coclique and every pair of cells is complete or empty
    cells: dict[int, list[int]] = {}
    for v, c in enumerate(colors):
        cells.setdefault(c, []).append(v)
    members = list(cells.values())
    for a in range(len(members)):
        for b in range(a, len(members)):
            seen = set()
            for u in members[a]:
                for v in members[b]:
                    if u != v:
                        seen.add(v in adjset[u])
            if len(seen) > 1:
                return False
    return True


def _code(edges, colors: list[int]) -> tuple:
    return tuple(sorted((min(colors[u], colors[v]), max(colors[u], colors[v])) for u, v in edges))


def _search(g: CombGraph, adj, adjset, colors):
    """Smallest (code, labelling) over the individualisation tree below ``colors``."""
    colors = _refine(adj, colors)
    n = g.n
    if len(set(colors)) == n:
        return _code(g.edges, colors), colors
    if _homogeneous(adjset, colors):
        # any ordering inside cells gives the same code
        order = sorted(range(n), key=lambda v: (colors[v], v))
        lab = [0] * n
        for pos, v in enumerate(order):
            lab[v] = pos
        return _code(g.edges, lab), lab
    sizes: dict[int, int] = {}
    for c in colors:
        sizes[c] = sizes.get(c, 0) + 1
    target = min(c for c, k in sizes.items() if k > 1)
    best = None
    for v in range(n):
        if colors[v] != target:
            continue
        # split v off ahead of the rest of its cell; rank keeps colours invariant
        ind = [2 * c + (0 if (c == target and u == v) else 1) if c == target else 2 * c for u, c in enumerate(colors)]
        res = _search(g, adj, adjset, ind)
        if best is None or res[0] < best[0]:
            best = res
    return best


def canonical_labeling(g: CombGraph, colors: Sequence[int] | None = None) -> tuple[tuple, list[int]]:
    """Return ``(code, labelling)``; ``labelling[v]`` is v's canonical position.

    ``colors`` optionally fixes an initial vertex colouring that labellings
    must respect (used for orbit computation).
    """
    if g.n > MAX_CANON_VERTICES:
        raise ValueError(f"canonical labelling limited to n <= {MAX_CANON_VERTICES}, got {g.n}")
    adjset = g.adjacency()
    adj = [sorted(s) for s in adjset]
    init = list(colors) if colors is not None else [0] * g.n
    code, lab = _search(g, adj, adjset, init)
    return (g.n, code), lab


def canonical_form(g: CombGraph) -> tuple:
    """Isomorphism invariant: equal values iff the graphs are isomorphic."""
    return canonical_labeling(g)[0]


def canonical_graph(g: CombGraph) -> CombGraph:
    _, lab = canonical_labeling(g)
    return g.relabel(lab)


def are_isomorphic(g: CombGraph, h: CombGraph) -> bool:
    return g.n == h.n and g.num_edges == h.num_edges and canonical_form(g) == canonical_form(h)


@dataclass(frozen=True)
class OrbitPartition:
    orbit_of: tuple[int, ...]
    representatives: tuple[int, ...]

    @property
    def num_orbits(self) -> int:
        return len(self.representatives)

    def members(self, k: int) -> list[int]:
        return [v for v, o in enumerate(self.orbit_of) if o == k]


def vertex_orbits(g: CombGraph) -> OrbitPartition:
    """Orbits of the automorphism group; representatives are the lowest index in each orbit.

    Two vertices share an orbit iff the graph with one of them marked is
    isomorphic to the graph with the other marked, decided by comparing
    canonical codes of the vertex-coloured graphs.
    """
    keys = []
    for v in range(g.n):
        marked = [1 if u == v else 0 for u in range(g.n)]
        keys.append(canonical_labeling(g, marked)[0])
    orbit_of = []
    reps: list[int] = []
    seen: dict[tuple, int] = {}
    for v, k in enumerate(keys):
        if k not in seen:
            seen[k] = len(reps)
            reps.append(v)
        orbit_of.append(seen[k])
    return OrbitPartition(tuple(orbit_of), tuple(reps))
