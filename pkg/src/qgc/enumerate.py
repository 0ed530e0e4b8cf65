"""Exhaustive enumeration of small connected graphs and trees up to isomorphism."""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations, product

from .canon import canonical_form, canonical_graph
from .graphs import CombGraph, is_connected

MAX_CONNECTED_VERTICES = 7
MAX_TREE_VERTICES = 10


@lru_cache(maxsize=None)
def _connected(n: int) -> tuple[CombGraph, ...]:
    if n == 1:
        return (CombGraph(1),)
    found: dict[tuple, CombGraph] = {}
    # every connected graph has a vertex whose removal leaves it connected
    for base in _connected(n - 1):
        for k in range(1, n):
            for nbrs in combinations(range(n - 1), k):
                g = CombGraph(n, list(base.edges) + [(u, n - 1) for u in nbrs])
                key = canonical_form(g)
                if key not in found:
                    found[key] = g
    return tuple(canonical_graph(found[k]) for k in sorted(found))


def enumerate_connected(n: int) -> list[CombGraph]:
    """One representative per isomorphism class of connected simple graphs on ``n`` vertices.

    Representatives are returned in canonical labelling, sorted by canonical
    code, so the output is deterministic.
    """
    if not 1 <= n <= MAX_CONNECTED_VERTICES:
        raise ValueError(f"enumerate_connected supports 1 <= n <= {MAX_CONNECTED_VERTICES}")
    return list(_connected(n))


def enumerate_connected_bruteforce(n: int) -> list[CombGraph]:
    """Same classes as :func:`enumerate_connected`, from all ``2^(n(n-1)/2)`` edge subsets."""
    pairs = list(combinations(range(n), 2))
    found: dict[tuple, CombGraph] = {}
    for mask in range(1 << len(pairs)):
        g = CombGraph(n, [pairs[i] for i in range(len(pairs)) if mask >> i & 1])
        if g.num_edges < n - 1 or not is_connected(g):
            continue
        found.setdefault(canonical_form(g), g)
    return [canonical_graph(found[k]) for k in sorted(found)]


# ---------------------------------------------------------------------------
# trees


def prufer_decode(seq, n: int) -> CombGraph:
    """Tree on ``0..n-1`` with Prüfer sequence ``seq`` (length ``n-2``)."""
    if n == 1:
        return CombGraph(1)
    if n == 2:
        return CombGraph(2, [(0, 1)])
    deg = [1] * n
    for x in seq:
        deg[x] += 1
    edges = []
    for x in seq:
        leaf = next(v for v in range(n) if deg[v] == 1)
        edges.append((leaf, x))
        deg[leaf] -= 1
        deg[x] -= 1
    u, v = (w for w in range(n) if deg[w] == 1)
    edges.append((u, v))
    return CombGraph(n, edges)


def tree_center_code(g: CombGraph) -> str:
    """AHU string of a tree rooted at its centre (the smaller one for bicentral trees)."""
    adj = g.adjacency()
    n = g.n
    if n == 1:
        return "()"
    deg = [len(a) for a in adj]
    layer = [v for v in range(n) if deg[v] <= 1]
    remaining = n
    while remaining > 2:
        remaining -= len(layer)
        nxt = []
        for v in layer:
            for w in adj[v]:
                deg[w] -= 1
                if deg[w] == 1:
                    nxt.append(w)
        layer = nxt

    def encode(v, parent):
        return "(" + "".join(sorted(encode(w, v) for w in adj[v] if w != parent)) + ")"

    return min(encode(c, -1) for c in layer)


@lru_cache(maxsize=None)
def _trees(n: int) -> tuple[CombGraph, ...]:
    if n == 1:
        return (CombGraph(1),)
    found: dict[tuple, CombGraph] = {}
    for base in _trees(n - 1):
        for v in range(n - 1):
            t = CombGraph(n, list(base.edges) + [(v, n - 1)])
            found.setdefault(canonical_form(t), t)
    return tuple(canonical_graph(found[k]) for k in sorted(found))


def enumerate_trees(n: int, method: str = "leaf") -> list[CombGraph]:
    """One representative per isomorphism class of trees on ``n`` vertices.

    ``method="leaf"`` grows trees by attaching a leaf to every vertex of
    every smaller tree and deduplicates by canonical form.  ``method="prufer"``
    decodes all ``n^(n-2)`` Prüfer sequences and deduplicates by centre-rooted
    AHU codes; it is the independent route and is slow beyond ``n = 8``.
    """
    if not 1 <= n <= MAX_TREE_VERTICES:
        raise ValueError(f"enumerate_trees supports 1 <= n <= {MAX_TREE_VERTICES}")
    if method == "leaf":
        return list(_trees(n))
    if method != "prufer":
        raise ValueError(f"unknown method {method!r}")
    found: dict[str, CombGraph] = {}
    for seq in product(range(n), repeat=max(n - 2, 0)):
        t = prufer_decode(seq, n)
        found.setdefault(tree_center_code(t), t)
    return [canonical_graph(g) for g in sorted(found.values(), key=canonical_form)]
