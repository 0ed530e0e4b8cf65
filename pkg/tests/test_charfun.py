import math
import random

import pytest
from hypothesis import given, strategies as st

from qgc.algebra import IntPoly, StructuralError, content_primitive, primitive
from qgc.charfun import (
    char_matrix_oracle,
    disc_char_poly,
    interlaces,
    phi_dirichlet,
    phi_form,
    phi_neumann,
    spectrum_families,
)
from qgc.enumerate import enumerate_connected, enumerate_trees
from qgc.graphs import CombGraph, complete_graph, cycle_graph, fixture, is_bipartite, is_connected, path_graph, pendant_vertices

import golden

K2 = complete_graph(2)
TRI = cycle_graph(3)
P3 = path_graph(3)


def product(factors):
    p = IntPoly((1,))
    for f in factors:
        p = p * IntPoly(f)
    return p


def random_connected(n, rng):
    while True:
        g = CombGraph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.45])
        if is_connected(g):
            return g


def test_pencil_examples():
    fig2 = primitive(product(golden.PRINTED_FIG2_P_FACTORS))
    assert primitive(disc_char_poly(fixture("fig2-left"))) == fig2
    tree = primitive(product(golden.PRINTED_TREE_P_FACTORS))
    assert primitive(disc_char_poly(fixture("fig5-left"))) == tree
    assert disc_char_poly(K2) == IntPoly((-1, 0, 1))


def test_pencil_errors():
    with pytest.raises(ValueError):
        disc_char_poly(K2, [0, 1])
    with pytest.raises(ValueError):
        disc_char_poly(CombGraph(3, [(0, 1)]))
    with pytest.raises(ValueError):
        phi_dirichlet(K2, [])


def test_neumann_examples():
    f = phi_neumann(fixture("fig2-left"))
    assert f.key == (0, 4, golden.DERIVED_FIG2_PHI_N_Q)
    f = phi_neumann(fixture("fig5-left"))
    assert (f.a, f.m, f.Q.coeffs) == (1, 1, golden.PRINTED_TREE_PHI_N["Q"])
    assert phi_neumann(K2).key == (1, 1, (1,))


def test_dirichlet_examples():
    f = phi_dirichlet(fixture("fig2-left"), [4])
    assert f.key == (0, 5, primitive(IntPoly(golden.PRINTED_FIG3[0])).coeffs)
    f = phi_dirichlet(fixture("fig2-right"), [4])
    assert f.key == (0, 5, primitive(IntPoly(golden.PRINTED_FIG4[0])).coeffs)
    f = phi_dirichlet(fixture("fig5-left"), [5])
    assert f.key == (0, 0, golden.PRINTED_FIG6[0])


@pytest.mark.parametrize(
    "name,table",
    [
        ("fig2-left", golden.DERIVED_FIG2_LEFT_PHI_D),
        ("fig2-right", golden.DERIVED_FIG2_RIGHT_PHI_D),
        ("fig5-left", golden.DERIVED_FIG5_LEFT_PHI_D),
        ("fig5-right", golden.DERIVED_FIG5_RIGHT_PHI_D),
    ],
)
def test_dirichlet_golden_tables(name, table):
    g = fixture(name)
    m = 5 if name.startswith("fig2") else 0
    for v, q in table.items():
        assert phi_dirichlet(g, [v]).key == (0, m, q)


def test_raw_scalars():
    g = fixture("fig2-left")
    assert phi_neumann(g).scale == golden.DERIVED_FIG2_LEFT_SCALES["N"]
    for v, k in golden.DERIVED_FIG2_LEFT_SCALES["D"].items():
        assert phi_dirichlet(g, [v]).scale == k
    fN, fD = phi_neumann(K2), phi_dirichlet(K2, [0])
    assert (fN.a, fN.m, fN.Q.coeffs, fN.scale) == golden.DERIVED_K2["N"]
    assert (fD.a, fD.m, fD.Q.coeffs, fD.scale) == golden.DERIVED_K2["D"]


def test_fig2_determinant_ratio():
    a, b = disc_char_poly(fixture("fig2-left")), disc_char_poly(fixture("fig2-right"))
    ca, pa = content_primitive(a)
    cb, pb = content_primitive(b)
    assert pa == pb
    # degree products 1024 and 768 against 256 for the quoted polynomial
    assert (a.lc, b.lc) == (1024, 768)
    assert (ca, cb) == (4, 3)


@pytest.mark.parametrize("n", range(2, 7))
def test_pencil_structure(n):
    for g in enumerate_connected(n):
        deg = g.degrees()
        p = disc_char_poly(g)
        assert p.degree == n and p.lc == math.prod(deg)
        assert p(1) == 0
        if is_bipartite(g):
            assert p.scale_arg(-1) == (p if n % 2 == 0 else -p)
        for v in range(n):
            pv = disc_char_poly(g, [v])
            assert pv.degree == n - 1
            assert pv.lc == math.prod(d for u, d in enumerate(deg) if u != v)


def test_oracle_examples():
    assert char_matrix_oracle(K2) == phi_neumann(K2)
    t = char_matrix_oracle(TRI)
    assert t.key == (0, 0, primitive(IntPoly((-1, 1)) * IntPoly((1, 2)) ** 2).coeffs)
    assert char_matrix_oracle(P3, [1]) == phi_dirichlet(P3, [1])


@pytest.mark.parametrize("n", range(2, 5))
def test_oracle_small(n):
    for g in enumerate_connected(n):
        assert char_matrix_oracle(g) == phi_neumann(g)
        for v in range(n):
            assert char_matrix_oracle(g, [v]) == phi_dirichlet(g, [v])


def test_oracle_on_fixtures():
    for name in ("fig2-left", "fig2-right", "fig5-left", "fig5-right"):
        g = fixture(name)
        assert char_matrix_oracle(g) == phi_neumann(g)
        assert char_matrix_oracle(g, [0]) == phi_dirichlet(g, [0])


def test_oracle_multi_vertex_dirichlet():
    g = fixture("fig2-right")
    assert char_matrix_oracle(g, [0, 5]) == phi_form(g, [0, 5])


def test_roots_real_in_unit_interval():
    fams = []
    for n in range(2, 7):
        for g in enumerate_connected(n):
            fams.append(phi_neumann(g))
            fams.extend(phi_dirichlet(g, [v]) for v in range(n))
    for n in range(2, 10):
        for t in enumerate_trees(n):
            fams.append(phi_neumann(t))
            fams.extend(phi_dirichlet(t, [v]) for v in range(n))
    for f in fams:
        sf = spectrum_families(f, tol=1e-3)
        assert not sf.anomalies
        assert sum(r.multiplicity for r in sf.cos_roots) == f.Q.degree


def test_spectrum_k2():
    vals = spectrum_families(phi_neumann(K2)).values(100)
    assert vals == pytest.approx([0.0] + [(k * math.pi) ** 2 for k in range(1, 4)])


def test_spectrum_p3():
    sf = spectrum_families(phi_neumann(P3))
    vals = sf.values(100)
    assert vals == pytest.approx([(k * math.pi / 2) ** 2 for k in range(0, 7)], abs=1e-9)


def test_spectrum_triangle():
    sf = spectrum_families(phi_neumann(TRI))
    rhos = sorted(round(r.rho, 12) for r in sf.cos_roots)
    assert rhos == [-0.5, 1.0] and sf.has_zero and not sf.sin_family
    want = [(2 * math.pi * k / 3) ** 2 for k in range(0, 7)]
    assert sf.values(170) == pytest.approx(want)


def test_spectrum_scales_with_ell():
    f = phi_neumann(fixture("fig2-left"))
    a = spectrum_families(f, 1.0).values(400)
    b = spectrum_families(f, 2.0).values(100)
    assert [x / 4 for x in a] == pytest.approx(b)


def test_interlacing_helper_rejects_swapped():
    mu = spectrum_families(phi_neumann(K2)).values(200)
    nu = spectrum_families(phi_dirichlet(K2, [0])).values(200)
    assert interlaces(mu, nu)
    assert not interlaces(nu, mu)
    assert not interlaces([0.0, 1.0, 2.0], [3.0])


@given(st.integers(3, 7), st.integers(0, 10_000))
def test_interlacing_pendant(n, seed):
    rng = random.Random(seed)
    g = random_connected(n, rng)
    pend = pendant_vertices(g)
    if not pend:
        v = rng.randrange(n)
        g = CombGraph(n + 1, list(g.edges) + [(v, n)])
        pend = [n]
    v = rng.choice(pend)
    mu = spectrum_families(phi_neumann(g)).values(200)
    nu = spectrum_families(phi_dirichlet(g, [v])).values(200)
    assert interlaces(mu, nu)


def test_families_json():
    d = spectrum_families(phi_neumann(TRI)).to_json(50)
    assert d["eigenvalues"][0] == 0.0 and d["lambda_max"] == 50
