from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from qgc.algebra import (
    IntPoly,
    content_primitive,
    exact_div,
    poly_gcd,
    primitive,
    real_roots_in,
    squarefree_decomposition,
)

Z = IntPoly.z()
FIG2_P = (Z - 1) * (4 * Z + 1) ** 3 * (4 * Z * Z + Z - 1)

coeff = st.integers(-20, 20)
polys = st.lists(coeff, min_size=1, max_size=9).map(IntPoly)
nonzero = polys.filter(lambda p: not p.is_zero())


def test_ring_basics():
    assert (Z - 1) * (Z + 1) == IntPoly((-1, 0, 1))
    assert (Z + 2) ** 3 == IntPoly((8, 12, 6, 1))
    assert (Z - Z).is_zero()
    assert IntPoly((0, 0, 0)).degree == -1 or IntPoly((0, 0, 0)).is_zero()


def test_eval_exact_and_complex():
    assert FIG2_P(1) == 0
    assert IntPoly((-1, 0, 1))(Fraction(1, 2)) == Fraction(-3, 4)
    assert abs(IntPoly((1, 0, 1))(1j)) < 1e-15


def test_content_primitive():
    assert content_primitive(IntPoly((2, 0, -2))) == (2, IntPoly((-1, 0, 1)))
    c3, p3 = content_primitive(3 * FIG2_P)
    c4, p4 = content_primitive(4 * FIG2_P)
    assert p3 == p4 and (c3, c4) == (3, 4)
    fig3 = IntPoly((-2, -2, 96, 320, 0, -512))
    assert primitive(fig3) == IntPoly((1, 1, -48, -160, 0, 256))
    with pytest.raises(ValueError):
        content_primitive(IntPoly())


def test_gcd_examples():
    a = (Z - 1) * (Z + 2)
    b = (Z - 1) * (Z - 3)
    assert poly_gcd(a, b) == Z - 1
    assert poly_gcd(-6 * a, IntPoly()) == primitive(a)


def test_exact_div_rejects_remainder():
    assert exact_div(Z * Z - 1, Z - 1) == Z + 1
    with pytest.raises(ArithmeticError):
        exact_div(Z * Z + 1, Z - 1)


@given(nonzero, nonzero)
def test_gcd_divides(p, q):
    g = poly_gcd(p, q)
    exact_div(p, g)
    exact_div(q, g)


@given(polys, nonzero)
def test_exact_div_roundtrip(p, q):
    assert exact_div(p * q, q) == p


@given(nonzero, nonzero, nonzero)
def test_gcd_recovers_common_factor(a, b, c):
    g = poly_gcd(a * c, b * c)
    exact_div(g, primitive(c))


@given(nonzero)
def test_squarefree_product(p):
    prod = IntPoly((1,))
    for f, k in squarefree_decomposition(p):
        prod = prod * f**k
    if p.degree >= 1:
        assert primitive(prod) == primitive(p)
    for f, _ in squarefree_decomposition(p):
        if f.degree >= 1:
            assert poly_gcd(f, f.derivative()).degree == 0


def test_real_roots_examples():
    r = real_roots_in(IntPoly((-1, 0, 1)), -2, 2)
    assert [x.value for x in r] == [-1.0, 1.0]
    roots = real_roots_in(FIG2_P, -1, 1)
    vals = sorted((round(x.value, 12), x.multiplicity) for x in roots)
    s17 = 17**0.5
    want = sorted(
        [(round((-1 - s17) / 8, 12), 1), (-0.25, 3), (round((-1 + s17) / 8, 12), 1), (1.0, 1)]
    )
    assert vals == want
    r = real_roots_in(IntPoly((-3, 0, 4)), -1, 1)
    assert [x.value for x in r] == pytest.approx([-(3**0.5) / 2, 3**0.5 / 2], abs=1e-12)


@given(st.lists(st.tuples(st.integers(-9, 9), st.integers(1, 5)), min_size=1, max_size=6))
def test_root_count_rational_linear_factors(factors):
    p = IntPoly((1,))
    for num, den in factors:
        p = p * IntPoly((-num, den))
    roots = real_roots_in(p, -10, 10)
    assert sum(r.multiplicity for r in roots) == len(factors)
    for r in roots:
        assert r.hi - r.lo <= Fraction(1, 10**12)
