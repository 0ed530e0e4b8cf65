import json
import random

import pytest

from qgc.canon import are_isomorphic
from qgc.census import (
    SCHEMA,
    cospectral_classes,
    fuzzy_ball_family,
    graph_census,
    graph_family,
    resolve_by_lead,
    tree_census,
)
from qgc.enumerate import enumerate_connected, enumerate_trees
from qgc.graphs import CombGraph, fixture, fuzzy_ball


def test_five_vertices_all_singletons():
    rep = cospectral_classes(enumerate_connected(5))
    assert all(len(c.members) == 1 for c in rep.classes)


def test_six_vertices_one_pair():
    fam = {f"g{k}": g for k, g in enumerate(enumerate_connected(6))}
    rep = cospectral_classes(fam)
    multi = rep.multi_classes
    assert len(multi) == 1 and len(multi[0].members) == 2
    a, b = (fam[k] for k in multi[0].members)
    pair = {are_isomorphic(a, fixture("fig2-left")), are_isomorphic(b, fixture("fig2-left"))}
    assert pair == {True, False}
    assert any(are_isomorphic(x, fixture("fig2-right")) for x in (a, b))


def test_nine_vertex_trees_one_pair():
    fam = {f"t{k}": g for k, g in enumerate(enumerate_trees(9))}
    multi = cospectral_classes(fam).multi_classes
    assert len(multi) == 1
    members = [fam[k] for k in multi[0].members]
    assert any(are_isomorphic(m, fixture("fig5-left")) for m in members)
    assert any(are_isomorphic(m, fixture("fig5-right")) for m in members)


def test_graph_census_counts():
    rep = graph_census()
    assert len(rep.classes) == len(rep.graphs) - 1
    assert rep.verdict == "resolved"
    cls = rep.multi_classes[0]
    assert sum(len(r.forms) for r in cls.resolution) == 6
    keys = [f.phi_D.key for r in cls.resolution for f in r.forms]
    assert len(set(keys)) == 6


def test_tree_census_counts():
    rep = tree_census()
    assert len(rep.classes) == len(rep.graphs) - 1
    assert rep.verdict == "resolved"
    cls = rep.multi_classes[0]
    keys = [f.phi_D.key for r in cls.resolution for f in r.forms]
    assert len(keys) == 14 and len(set(keys)) == 14


def test_trees_up_to_eight_have_no_pairs():
    assert not tree_census(8).multi_classes


def test_singleton_class_trivially_resolved():
    table, verdict, witness = resolve_by_lead({"a": fixture("fig2-left")})
    assert verdict == "resolved" and witness is None


def test_unresolved_witness():
    # two copies of one graph produce identical lead forms
    g = fixture("fig2-left")
    table, verdict, witness = resolve_by_lead({"a": g, "b": g.relabel([5, 4, 3, 2, 1, 0])})
    assert verdict == "unresolved"
    assert witness["members"] == ["a", "b"]


@pytest.mark.parametrize("n", range(4, 9))
def test_fuzzy_ball_families(n):
    rep = fuzzy_ball_family(n)
    assert rep.extra["single_cospectral_class"]
    assert len(rep.classes) == 1 and len(rep.classes[0].members) == n // 2
    assert rep.verdict == "resolved"
    res = rep.classes[0].resolution
    for a in res:
        for b in res:
            if a.member != b.member:
                ka = {f.phi_D.key for f in a.forms}
                kb = {f.phi_D.key for f in b.forms}
                assert not ka & kb
    assert isinstance(rep.extra["bulk"]["coincide"], bool)
    checks = rep.extra["exponent_check"]["entries"]
    assert all(c["pencil_exponent"] == (n * n - n - 2) // 2 == c["canonical_m"] for c in checks)
    assert rep.extra["exponent_check"]["discrepancy_detected"] == any(not c["agrees"] for c in checks)


def test_fuzzy_n4_matches_fig2_result():
    rep = fuzzy_ball_family(4)
    keys = sorted(f.phi_D.key for r in rep.classes[0].resolution for f in r.forms)
    g = graph_census().multi_classes[0]
    # off-bulk vertices are a subset of the six orbit forms of the pair
    six = {f.phi_D.key for r in g.resolution for f in r.forms}
    assert set(keys) <= six


def test_fuzzy_range():
    with pytest.raises(ValueError):
        fuzzy_ball_family(3)
    with pytest.raises(ValueError):
        fuzzy_ball_family(9)


def test_relabeling_invariance():
    rng = random.Random(5)
    fam = graph_family(6, 6)
    shuffled = {}
    for k, g in fam.items():
        perm = list(range(g.n))
        rng.shuffle(perm)
        shuffled[k] = g.relabel(perm)
    a = cospectral_classes(fam)
    b = cospectral_classes(shuffled)
    assert [c.members for c in a.classes] == [c.members for c in b.classes]
    for ca, cb in zip(a.multi_classes, b.multi_classes):
        ta, va, _ = resolve_by_lead({k: fam[k] for k in ca.members})
        tb, vb, _ = resolve_by_lead({k: shuffled[k] for k in cb.members})
        assert va == vb
        assert [sorted(f.phi_D.key for f in r.forms) for r in ta] == [sorted(f.phi_D.key for f in r.forms) for r in tb]


def test_disconnected_member_rejected():
    with pytest.raises(ValueError):
        cospectral_classes([CombGraph(3, [(0, 1)])])


def test_parallel_matches_serial():
    a = graph_census(6, workers=1).dumps()
    b = graph_census(6, workers=2).dumps()
    assert a == b


def test_json_document():
    rep = fuzzy_ball_family(5)
    doc = json.loads(rep.dumps())
    assert doc["schema"] == SCHEMA
    assert doc["num_graphs"] == 2 and doc["verdict"] == "resolved"
    aliases = {g.get("alias") for g in json.loads(graph_census().dumps())["graphs"]}
    assert {"fig2-left", "fig2-right"} <= aliases


def test_summary_line():
    s = tree_census().summary()
    assert "co-spectral class sizes: 2" in s and "resolved" in s


def test_family_ranges():
    with pytest.raises(ValueError):
        graph_family(7)
    with pytest.raises(ValueError):
        graph_census(6, min_vertices=1)
