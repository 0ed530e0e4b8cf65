"""Scattering off a triangle with one lead.

S is unimodular on the real axis, and its poles sit in the closed lower
half-plane of the principal strip.  Real poles are embedded eigenvalues
(eigenfunctions vanishing at the lead vertex); the rest are genuine
resonances with a finite lifetime.
"""

import cmath
import math

import numpy as np

from qgc.scattering import jost_for_lead, lead_forms, resonances, s_eval
from qgc.graphs import CombGraph, cycle_graph

# warm-up: an interval with a lead gives a pure phase
N, D = lead_forms(CombGraph(2, [(0, 1)]), 0)
for lam in (0.5, 4.0, 30.0):
    print(f"K2  lam={lam:5}: S={s_eval(N, D, 1.0, lam):.6f}  -exp(2i sqrt(lam))={-cmath.exp(2j * math.sqrt(lam)):.6f}")

tri = cycle_graph(3)
N, D = lead_forms(tri, 0)
print("\ntriangle, lead at 0")
print("  phi_N =", N)
print("  phi_D =", D)
print("  max ||S|-1| on [0.1, 100]:", max(abs(abs(s_eval(N, D, 1.0, x)) - 1) for x in np.geomspace(0.1, 100, 200)))

r = resonances(jost_for_lead(tri, 0))
print("\n  poles of S in the strip (omega, multiplicity):")
for re, im, k in r.rows():
    print(f"    {re:+.6f} {im:+.6f}i  x{k}")
print("  expected decay rate of the complex ones: log(3)/3 =", math.log(3) / 3)
