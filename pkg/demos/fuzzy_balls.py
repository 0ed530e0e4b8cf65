"""Every fuzzy ball of a given size is co-spectral with every other.

FB(r, n-r) for r = 1..n//2 all share phi_N.  A lead on either off-bulk
vertex separates them.  On the bulk side the report only says whether the
forms happen to coincide; it draws no conclusion from it.
"""

from qgc.census import fuzzy_ball_family

for n in range(4, 9):
    rep = fuzzy_ball_family(n)
    ex = rep.extra
    print(
        f"n={n}: members={len(rep.graphs)}  single class={ex['single_cospectral_class']}  "
        f"off-bulk verdict={rep.verdict}  bulk coincide={ex['bulk']['coincide']}"
    )
    for e in ex["exponent_check"]["entries"][:2]:
        print(
            f"       {e['member']} vertex {e['vertex']} (degree {e['degree']}): pencil exponent "
            f"{e['pencil_exponent']}, degree-shifted {e['degree_shifted_exponent']}, observed m {e['canonical_m']}"
        )
