import random
from itertools import permutations

import pytest
from hypothesis import given, strategies as st

from qgc.algebra import IntPoly, MultiPoly, bareiss_det, intpoly_det, multi_det, reduce_relation, split_trig_monomial

c = MultiPoly.monomial(i=1)
s = MultiPoly.monomial(j=1)
lam = MultiPoly.monomial(k=1)

monos = st.tuples(st.integers(0, 3), st.integers(0, 4), st.integers(0, 3))
multipolys = st.dictionaries(monos, st.integers(-5, 5).filter(bool), max_size=5).map(MultiPoly)


def one_step(p: MultiPoly, rng: random.Random) -> MultiPoly | None:
    """Rewrite a single reducible monomial chosen at random, or None at a normal form."""
    red = [e for e in p.terms if e[1] >= 2 and e[2] >= 1]
    if not red:
        return None
    i, j, k = rng.choice(red)
    a = p.terms[(i, j, k)]
    rest = MultiPoly({e: v for e, v in p.terms.items() if e != (i, j, k)})
    return rest + MultiPoly({(i, j - 2, k - 1): a, (i + 2, j - 2, k - 1): -a})


def test_reduce_examples():
    assert reduce_relation(lam * s * s * c) == c - c * c * c
    assert reduce_relation(lam * lam * s * s * s) == lam * s - lam * s * c * c
    assert reduce_relation(c * c + lam * s * s) == MultiPoly.const(1)


@given(multipolys, st.integers(0, 10_000))
def test_rewrite_confluence(p, seed):
    rng = random.Random(seed)
    q = p
    while (nxt := one_step(q, rng)) is not None:
        q = nxt
    assert q == reduce_relation(p)


@given(multipolys)
def test_reduce_normal_form(p):
    r = reduce_relation(p)
    assert all(min(j // 2, k) == 0 for (_, j, k) in r.terms)
    assert reduce_relation(r) == r
    # value preserved on the relation variety
    for w in (0.3, 1.7, 2.9):
        import math

        cv, sv, lv = math.cos(w), math.sin(w) / w, w * w
        assert r(cv, sv, lv) == pytest.approx(p(cv, sv, lv), abs=1e-7 * (1 + sum(abs(a) for a in p.terms.values())) * 50)


def test_det_examples():
    assert multi_det([[c]]) == c
    assert multi_det([[c, s], [-lam * s, c]]) == c * c + lam * s * s
    with pytest.raises(ValueError):
        multi_det([])


def cofactor(m):
    n = len(m)
    if n == 1:
        return m[0][0]
    total = m[0][0] - m[0][0]
    for j in range(n):
        minor = [row[:j] + row[j + 1 :] for row in m[1:]]
        term = m[0][j] * cofactor(minor)
        total = total + term if j % 2 == 0 else total - term
    return total


small_multi = st.dictionaries(
    st.tuples(st.integers(0, 2), st.integers(0, 2), st.integers(0, 1)), st.integers(-3, 3).filter(bool), max_size=3
).map(MultiPoly)


@given(st.lists(st.lists(small_multi, min_size=4, max_size=4), min_size=4, max_size=4))
def test_multi_det_matches_cofactor(m):
    assert multi_det(m) == cofactor(m)


@given(st.lists(st.lists(st.integers(-9, 9), min_size=5, max_size=5), min_size=5, max_size=5))
def test_integer_det_matches_leibniz(m):
    def leibniz(a):
        n = len(a)
        tot = 0
        for p in permutations(range(n)):
            sign = 1
            for i in range(n):
                for j in range(i + 1, n):
                    if p[i] > p[j]:
                        sign = -sign
            prod = sign
            for i in range(n):
                prod *= a[i][p[i]]
            tot += prod
        return tot

    assert bareiss_det(m, 1) == leibniz(m)


def test_intpoly_det():
    z = IntPoly.z()
    one = IntPoly.const(1)
    m = [[2 * z, -one], [-one, 2 * z]]
    assert intpoly_det(m) == IntPoly((-1, 0, 4))


def test_split_trig_monomial():
    p = lam * s * (c * c - 1)
    assert split_trig_monomial(p) == (1, 1, IntPoly((-1, 0, 1)))
    with pytest.raises(ValueError):
        split_trig_monomial(s + lam)
