"""Simple combinatorial graphs standing in for equilateral metric graphs."""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

Edge = tuple[int, int]


@dataclass(frozen=True)
class CombGraph:
    """Vertex count plus a set of undirected edges on ``0..n-1``."""

    n: int
    edges: frozenset

    def __init__(self, n: int, edges: Iterable[Sequence[int]] = ()):
        if n < 1:
            raise ValueError("a graph needs at least one vertex")
        es = set()
        for e in edges:
            u, v = int(e[0]), int(e[1])
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge {(u, v)} out of range for n={n}")
            key = (u, v) if u < v else (v, u)
            if key in es:
                raise ValueError(f"multi-edge {key}")
            es.add(key)
        object.__setattr__(self, "n", int(n))
        object.__setattr__(self, "edges", frozenset(es))

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def adjacency(self) -> list[set[int]]:
        adj = [set() for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return adj

    def degrees(self) -> list[int]:
        d = [0] * self.n
        for u, v in self.edges:
            d[u] += 1
            d[v] += 1
        return d

    def incident_edges(self, v: int) -> list[Edge]:
        return sorted(e for e in self.edges if v in e)

    def relabel(self, perm: Sequence[int]) -> "CombGraph":
        """Graph with vertex ``v`` renamed to ``perm[v]``."""
        return CombGraph(self.n, ((perm[u], perm[v]) for u, v in self.edges))

    def to_json(self) -> dict:
        return {"n": self.n, "edges": [list(e) for e in self.sorted_edges()]}

    @classmethod
    def from_json(cls, data) -> "CombGraph":
        if isinstance(data, str):
            data = json.loads(data)
        return cls(int(data["n"]), [tuple(e) for e in data["edges"]])

    def __repr__(self) -> str:
        return f"CombGraph(n={self.n}, edges={self.sorted_edges()})"


def degree(g: CombGraph, v: int) -> int:
    if not 0 <= v < g.n:
        raise ValueError(f"vertex {v} out of range for n={g.n}")
    return sum(1 for e in g.edges if v in e)


def is_connected(g: CombGraph) -> bool:
    adj = g.adjacency()
    seen = {0}
    todo = deque([0])
    while todo:
        u = todo.popleft()
        for w in adj[u]:
            if w not in seen:
                seen.add(w)
                todo.append(w)
    return len(seen) == g.n


def is_tree(g: CombGraph) -> bool:
    return g.num_edges == g.n - 1 and is_connected(g)


def is_bipartite(g: CombGraph) -> bool:
    adj = g.adjacency()
    color = [-1] * g.n
    for root in range(g.n):
        if color[root] >= 0:
            continue
        color[root] = 0
        todo = deque([root])
        while todo:
            u = todo.popleft()
            for w in adj[u]:
                if color[w] < 0:
                    color[w] = 1 - color[u]
                    todo.append(w)
                elif color[w] == color[u]:
                    return False
    return True


def pendant_vertices(g: CombGraph) -> list[int]:
    return [v for v, d in enumerate(g.degrees()) if d == 1]


def interior_subgraph(g: CombGraph, vstar: Iterable[int]) -> tuple[CombGraph, list[int]]:
    """Delete ``vstar`` and its edges.

    Returns the remaining graph, relabelled densely in increasing vertex
    order, together with the degrees of the surviving vertices *measured in
    g* (not in the subgraph).
    """
    removed = set(vstar)
    for v in removed:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} out of range for n={g.n}")
    keep = [v for v in range(g.n) if v not in removed]
    if not keep:
        raise ValueError("cannot delete every vertex")
    index = {v: i for i, v in enumerate(keep)}
    sub = CombGraph(
        len(keep),
        ((index[u], index[v]) for u, v in g.edges if u in index and v in index),
    )
    degs = g.degrees()
    return sub, [degs[v] for v in keep]


# ---------------------------------------------------------------------------
# constructors


def complete_graph(n: int) -> CombGraph:
    return CombGraph(n, combinations(range(n), 2))


def path_graph(n: int) -> CombGraph:
    return CombGraph(n, ((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> CombGraph:
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    return CombGraph(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(leaves: int) -> CombGraph:
    return CombGraph(leaves + 1, ((0, i) for i in range(1, leaves + 1)))


def lasso() -> CombGraph:
    """Triangle with a pendant edge: vertices 0-1-2 form the loop, 3 hangs off 0."""
    return CombGraph(4, [(0, 1), (1, 2), (0, 2), (0, 3)])


def fuzzy_ball(r: int, s: int) -> CombGraph:
    """Complete bulk on ``r+s`` vertices plus two off-bulk vertices.

    Vertex ``r+s`` (w1) is joined to bulk vertices ``0..r-1`` and vertex
    ``r+s+1`` (w2) to ``r..r+s-1``.
    """
    if r < 1 or s < 1:
        raise ValueError("fuzzy_ball needs r >= 1 and s >= 1")
    n = r + s
    if n < 4:
        raise ValueError("fuzzy_ball needs r + s >= 4")
    w1, w2 = n, n + 1
    edges = list(combinations(range(n), 2))
    edges += [(i, w1) for i in range(r)]
    edges += [(i, w2) for i in range(r, n)]
    return CombGraph(n + 2, edges)


_FIXTURES = {
    "fig2-left": lambda: fuzzy_ball(2, 2),
    "fig2-right": lambda: fuzzy_ball(1, 3),
    "fig5-left": lambda: CombGraph(
        9, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (4, 6), (4, 7), (3, 8)]
    ),
    "fig5-right": lambda: CombGraph(
        9, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 6), (4, 7), (2, 5), (2, 8)]
    ),
}

FIXTURE_NAMES = tuple(_FIXTURES)


def fixture(name: str) -> CombGraph:
    try:
        return _FIXTURES[name]()
    except KeyError:
        raise ValueError(f"unknown fixture {name!r}; choose from {', '.join(_FIXTURES)}") from None
