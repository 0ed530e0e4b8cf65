import random

import pytest

from qgc.canon import canonical_form
from qgc.enumerate import enumerate_connected, enumerate_connected_bruteforce, enumerate_trees, prufer_decode
from qgc.graphs import CombGraph, is_connected, is_tree

import golden


@pytest.mark.parametrize("n", range(1, 8))
def test_connected_counts(n):
    gs = enumerate_connected(n)
    assert len(gs) == golden.CONNECTED_COUNTS[n]
    assert len({canonical_form(g) for g in gs}) == len(gs)
    assert all(is_connected(g) for g in gs)


@pytest.mark.parametrize("n", range(1, 6))
def test_connected_matches_bruteforce(n):
    fast = [canonical_form(g) for g in enumerate_connected(n)]
    slow = [canonical_form(g) for g in enumerate_connected_bruteforce(n)]
    assert fast == slow


def test_connected_n6_bruteforce():
    assert len(enumerate_connected_bruteforce(6)) == 112


def test_random_connected_graphs_are_represented():
    rng = random.Random(7)
    reps = {n: {canonical_form(g) for g in enumerate_connected(n)} for n in range(2, 7)}
    hits = 0
    while hits < 300:
        n = rng.randint(2, 6)
        g = CombGraph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.5])
        if not is_connected(g):
            continue
        assert canonical_form(g) in reps[n]
        hits += 1


@pytest.mark.parametrize("n", range(1, 11))
def test_tree_counts(n):
    ts = enumerate_trees(n)
    assert len(ts) == golden.TREE_COUNTS[n]
    assert all(is_tree(t) for t in ts)
    assert len({canonical_form(t) for t in ts}) == len(ts)


@pytest.mark.parametrize("n", range(1, 9))
def test_prufer_route_agrees(n):
    a = sorted(canonical_form(t) for t in enumerate_trees(n))
    b = sorted(canonical_form(t) for t in enumerate_trees(n, method="prufer"))
    assert a == b


def test_prufer_decode():
    t = prufer_decode((3, 3, 3), 5)
    assert sorted(t.degrees()) == [1, 1, 1, 1, 4]
    assert prufer_decode((), 2).num_edges == 1


def test_ranges():
    with pytest.raises(ValueError):
        enumerate_connected(8)
    with pytest.raises(ValueError):
        enumerate_trees(11)
    with pytest.raises(ValueError):
        enumerate_trees(0)
