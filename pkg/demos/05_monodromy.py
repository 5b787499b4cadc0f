"""
Monodromy of the Milnor fiber
=============================

Each multiplicity e_d is pinned down by rules: a flat screen, products,
equality with beta_p for reflection arrangements, the bound e_{p^s} <= beta_p,
and lower bounds from reduced multinets.  Every status records its rules.
"""

from reflarr import catalog
from reflarr.monodromy import char_poly, profile_for
from reflarr.multinet import hessian_4net

for m in range(2, 8):
    arr = catalog.build(f"full-monomial:{m}:3")
    print(f"A({m},1,3):  Delta(t) = {char_poly(profile_for(arr))}")

arr = catalog.build("hessian")
prof = profile_for(arr, [hessian_4net()])
for d, s in sorted(prof.statuses.items()):
    value = s.lo if s.kind != "range" else f"between {s.lo} and {s.hi}"
    print(f"  e_{d:<2d} {s.kind:5s} {value}   ({', '.join(s.rules)})")
print("Hessian:", char_poly(prof))
