"""High-energy decay of the potential corrections.

For a smooth bump potential on one edge, the solutions s and c approach
their free counterparts as lambda grows.  Sampling lambda at points where
the free phase is fixed removes the oscillation, so the log-log slopes are
clean: about -1 for s and -1/2 for c.
"""

from qgc.slnumeric import asymptotic_check, bump, phase_locked_lambdas

lams = phase_locked_lambdas(1e2, 1e6, 9)
rep = asymptotic_check(bump(), lams)
print(f"{'lambda':>12} {'|s - s0|':>12} {'|c - c0|':>12}")
for lam, es, ec in zip(rep.lambdas, rep.err_s, rep.err_c):
    print(f"{lam:12.1f} {es:12.3e} {ec:12.3e}")
print(f"\nslope s: {rep.slope_s:.3f}   slope c: {rep.slope_c:.3f}   S error decreasing: {rep.S_decreasing}")
