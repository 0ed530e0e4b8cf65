"""Two fuzzy balls on six vertices that no closed-graph spectrum can tell apart.

FB(2,2) and FB(1,3) share the discrete pencil determinant up to a constant,
so their free Neumann characteristic functions coincide.  Hanging a single
infinite lead on any vertex breaks the tie: the Dirichlet forms below are all
different, which is what makes the pair resolvable by scattering.
"""

from qgc import disc_char_poly, phi_neumann
from qgc.algebra import content_primitive
from qgc.census import lead_forms_by_orbit
from qgc.graphs import fixture

left, right = fixture("fig2-left"), fixture("fig2-right")

for name, g in (("FB(2,2)", left), ("FB(1,3)", right)):
    c, prim = content_primitive(disc_char_poly(g))
    print(f"{name}: P(z) = {c} * ({prim})")

print()
print("phi_N equal:", phi_neumann(left) == phi_neumann(right))
print("phi_N =", phi_neumann(left))

print()
print("lead at one vertex per orbit:")
seen = {}
for name, g in (("FB(2,2)", left), ("FB(1,3)", right)):
    for f in lead_forms_by_orbit(g):
        print(f"  {name} orbit {f.orbit}: {f.phi_D}")
        seen.setdefault(f.phi_D.key, []).append(name)
print("all six distinct:", all(len(v) == 1 for v in seen.values()))
