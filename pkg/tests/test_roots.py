import numpy as np
import pytest
from hypothesis import given, strategies as st

from qgc.roots import ConvergenceError, aberth, relative_residual


def sorted_roots(z):
    return sorted(z, key=lambda x: (round(x.real, 8), round(x.imag, 8)))


def test_simple():
    z = aberth([-1, 0, 1])
    assert sorted_roots(z) == pytest.approx([-1, 1])
    z = aberth([1, 0, 1])
    assert sorted_roots(z) == pytest.approx([-1j, 1j])


def test_trailing_zeros_and_constants():
    assert len(aberth([5])) == 0
    assert len(aberth([2, 1, 0, 0])) == 1


def test_deterministic():
    c = [3, -1, 4, 1, -5, 9, 2]
    assert np.array_equal(aberth(c, seed=3), aberth(c, seed=3))


def test_matches_numpy():
    rng = np.random.default_rng(0)
    for deg in (5, 12, 25):
        c = [int(x) for x in rng.integers(-20, 20, deg + 1)]
        c[-1] = c[-1] or 1
        ours = np.sort_complex(aberth(c))
        ref = np.sort_complex(np.roots(c[::-1]))
        assert np.allclose(ours, ref, atol=1e-8)


def test_non_convergence_reports_residual():
    with pytest.raises(ConvergenceError) as info:
        aberth([complex(x) for x in [7, 1, -3, 2, 9, 4, 1]], max_iter=1, tol=1e-30)
    assert info.value.residual > 0


def test_multiple_and_zero_roots():
    z = aberth([0, 0, -1, 3, -3, 1])  # z^2 (z - 1)^3
    assert np.sum(z == 0) == 2
    assert np.all(np.abs(z[z != 0] - 1) < 1e-4)


@given(st.lists(st.integers(-6, 6), min_size=1, max_size=8))
def test_integer_root_products(rts):
    c = np.poly(rts)[::-1]
    z = aberth([int(round(x)) for x in c])
    assert len(z) == len(rts)
    desc = np.array([complex(x) for x in c[::-1]])
    scale = np.polyval(np.abs(desc), np.maximum(1.0, np.abs(z)))
    assert np.all(np.abs(np.polyval(desc, z)) <= 1e-10 * scale)
    for r in set(rts):
        k = rts.count(r)
        assert np.sum(np.abs(z - r) < 0.05) == k


@given(st.lists(st.integers(-30, 30), min_size=2, max_size=10, unique=True))
def test_simple_roots_accurate(rts):
    c = [int(round(x)) for x in np.poly(rts)[::-1]]
    z = aberth(c)
    for r in rts:
        assert np.min(np.abs(z - r)) < 1e-9 * max(1, abs(r))
    desc = np.array([complex(x) for x in c[::-1]])
    assert np.all(relative_residual(desc, z) < 1e-12)
