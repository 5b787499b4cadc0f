"""
Building arrangements and listing their rank-2 flats
====================================================

Normals live in Q(zeta_m), stored exactly in the power basis modulo the
cyclotomic polynomial.  Every rank-2 flat X comes with its full member set A_X.
"""

from math import comb

from reflarr import catalog
from reflarr.arrangement import arrangement_rank, compute_flat_table, decompose
from reflarr.cyclotomic import CycElem

# exact cyclotomic arithmetic: i^2 = -1 and 1 + w + w^2 = 0
i = CycElem.zeta(4)
w = CycElem.zeta(3)
print("i*i =", i * i, "   1 + w + w^2 =", 1 + w + w * w)

# the full monomial arrangement A(4,1,3): z1 z2 z3 (z_i^4 - z_j^4)
arr = catalog.build("full-monomial:4:3")
print(arr, "rank", arrangement_rank(arr))
print("labels:", " ".join(arr.labels))

flats = compute_flat_table(arr)
print(len(flats.flats), "rank-2 flats, multiplicities", sorted(set(flats.multiplicities())))

# every pair of hyperplanes meets in exactly one flat
print("pair count:", sum(comb(k, 2) for k in flats.multiplicities()), "=", comb(arr.n, 2))

# the census by flat type agrees with the closed form
print("census:  ", catalog.observed_census(arr, flats))
print("expected:", catalog.expected_flat_census("full-monomial:4:3"))

# the exceptional arrangements are irreducible too
for name in ("G31", "G32", "G33", "hessian"):
    a = catalog.build(name)
    print(f"{name:8s} n = {a.n:2d}  rank = {arrangement_rank(a)}  components = {len(decompose(a))}")
