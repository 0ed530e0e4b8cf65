"""Regenerate the derived reference values in tests/golden.py by independent routes.

* pencil determinants with sympy (no package determinant code involved);
* triangle + lead poles of S by an argument-principle scan of E(-w) built
  from sin/cos directly, refined with mpmath.findroot.

Prints each value and whether it matches the frozen copy.  Run from the
repository root: ``python tools/derive_oracles.py``.
"""

import math
import sys
from pathlib import Path

import mpmath
import numpy as np
import sympy as sp

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "tests"))
import golden  # noqa: E402

from qgc.graphs import cycle_graph, fixture  # noqa: E402

z = sp.Symbol("z")


def sympy_pencil(g, vstar=()):
    keep = [v for v in range(g.n) if v not in vstar]
    deg = g.degrees()
    adj = g.adjacency()
    m = sp.Matrix(len(keep), len(keep), lambda i, j: deg[keep[i]] * z if i == j else (-1 if keep[j] in adj[keep[i]] else 0))
    return sp.Poly(sp.expand(m.det()), z)


def primitive_tuple(p: sp.Poly):
    _, prim = p.primitive()
    if prim.LC() < 0:
        prim = -prim
    return tuple(int(c) for c in reversed(prim.all_coeffs()))


def check(label, got, want):
    print(f"{'ok ' if got == want else 'DIFF'} {label}: {got}")
    return got == want


def pencils():
    ok = True
    for name, table in (
        ("fig2-left", golden.DERIVED_FIG2_LEFT_PHI_D),
        ("fig2-right", golden.DERIVED_FIG2_RIGHT_PHI_D),
        ("fig5-left", golden.DERIVED_FIG5_LEFT_PHI_D),
        ("fig5-right", golden.DERIVED_FIG5_RIGHT_PHI_D),
    ):
        g = fixture(name)
        for v, want in table.items():
            ok &= check(f"{name} lead {v}", primitive_tuple(sympy_pencil(g, (v,))), want)
    p = sympy_pencil(fixture("fig2-left"))
    ok &= check("fig2 phi_N Q", primitive_tuple(p), golden.DERIVED_FIG2_PHI_N_Q)
    scales = {"N": int(p.primitive()[0]), "D": {v: int(sympy_pencil(fixture("fig2-left"), (v,)).primitive()[0]) for v in (0, 4)}}
    ok &= check("fig2-left scales", scales, golden.DERIVED_FIG2_LEFT_SCALES)
    return ok


def triangle_scan():
    # E(w) = phi_N + i w phi_D with phi_N = 2(4c^3 - 3c - 1), phi_D = s (4c^2 - 1)
    def e_minus(w):
        c = mpmath.cos(-w)
        s = mpmath.sin(-w) / (-w) if w != 0 else mpmath.mpf(1)
        return 2 * (4 * c**3 - 3 * c - 1) + 1j * (-w) * s * (4 * c**2 - 1)

    def winding(x0, x1, y0, y1, n=400):
        t = np.linspace(0, 1, n, endpoint=False)
        pts = np.concatenate(
            [x0 + (x1 - x0) * t + 1j * y0, x1 + 1j * (y0 + (y1 - y0) * t), x1 - (x1 - x0) * t + 1j * y1, x0 + 1j * (y1 - (y1 - y0) * t)]
        )
        vals = np.array([complex(e_minus(complex(p))) for p in pts])
        ang = np.unwrap(np.angle(np.append(vals, vals[0])))
        return round((ang[-1] - ang[0]) / (2 * math.pi))

    d = 0.0123
    xs = np.linspace(-math.pi + d, math.pi + d, 33)
    ys = np.linspace(-4.0171, 1.0313, 21)
    found = []
    for i in range(len(xs) - 1):
        for j in range(len(ys) - 1):
            if winding(xs[i], xs[i + 1], ys[j], ys[j + 1]):
                c0 = complex((xs[i] + xs[i + 1]) / 2, (ys[j] + ys[j + 1]) / 2)
                w = complex(mpmath.findroot(e_minus, c0))
                found.append((w.real, w.imag))
    found.sort(key=lambda t: (round(t[0], 9), t[1]))
    want = golden.DERIVED_TRIANGLE_SCAN
    close = len(found) == len(want) and all(abs(complex(*a) - complex(*b)) < 1e-9 for a, b in zip(found, want))
    print(f"{'ok ' if close else 'DIFF'} triangle scan: {found}")
    return close


if __name__ == "__main__":
    good = pencils() & triangle_scan()
    sys.exit(0 if good else 1)
