"""Bound reports, the logarithmic bound, and an LP dump for outside solvers."""

from bicover.optimize import log_bound, lp_dump
from bicover.graphs import complete, cycle, hypercube, petersen
from bicover.reports import REPORT_COLUMNS, bound_report

print("\t".join(REPORT_COLUMNS))
for G, d in ((hypercube(5), 1), (cycle(5), 1), (petersen(), 2), (complete(6), 3)):
    print("\t".join(bound_report(G, d).row()))

rec = log_bound(complete(8), d=2)
print(f"\nK8: bc = {rec.bc}, B = {rec.B}, bc/(1+ln B) = {rec.bound:.6f} <= bc* = {rec.bc_star}")

print("\nLP for the 2-cover of C5:")
print(lp_dump(cycle(5), 2, integer=True))
