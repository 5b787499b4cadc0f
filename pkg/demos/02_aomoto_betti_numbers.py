"""
Mod-p Aomoto-Betti numbers
==========================

beta_p is dim Z_p(A) - 1, where Z_p(A) is the space of functions on the
hyperplanes that are constant on flats of multiplicity prime to p and sum to
zero on the others.  The same number comes out of the Aomoto complex.
"""

from reflarr import catalog
from reflarr.arrangement import compute_flat_table
from reflarr.orlik_solomon import aomoto_h1
from reflarr.resonance import beta_p, vanishing_report

for spec in ("monomial:3:3", "monomial:4:3", "monomial:5:4", "full-monomial:4:3",
             "full-monomial:5:3", "hessian", "G32"):
    arr = catalog.build(spec)
    flats = compute_flat_table(arr)
    row = []
    for p in (2, 3, 5):
        b = beta_p(arr, p, flats).value
        assert b == aomoto_h1(arr, flats, p)
        row.append(f"beta_{p} = {b}")
    print(f"{spec:20s}", "  ".join(row))

# a nonconstant cocycle on the Hessian arrangement, p = 2
arr = catalog.build("hessian")
b = beta_p(arr, 2)
print("witness:", dict(zip(arr.labels, b.witness)))

# the combinatorial criteria that force beta_p = 0
arr = catalog.build("G32")
for c in vanishing_report(arr, None, 2):
    print(f"  {'fires' if c.fires else '     '}  {c.name}")
