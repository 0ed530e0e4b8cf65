"""The smallest co-spectral trees, nine vertices each.

The census over all trees up to nine vertices finds exactly one class with
more than one member.  Both trees carry the same phi_N, and the fourteen
lead-at-one-vertex forms (seven orbits each) are all distinct.
"""

from qgc.census import lead_forms_by_orbit, tree_census

rep = tree_census()
print(rep.summary())

(cls,) = rep.multi_classes
print("shared phi_N:", cls.phi_N)
for res in cls.resolution:
    g = rep.graphs[res.member]
    print(f"\n{res.member}: edges {sorted(g.edges)}")
    for f in res.forms:
        print(f"  orbit {f.orbit}: {f.phi_D}")
print("\nverdict:", cls.verdict)
