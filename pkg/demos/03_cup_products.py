"""
Cup products in degree two
==========================

Degree-two classes are stored flat by flat.  The cup product of two
one-classes is checked here against a brute-force rewriting in the exterior
algebra, on a small arrangement.
"""

import random

from reflarr import catalog
from reflarr.arrangement import compute_flat_table
from reflarr.orlik_solomon import cup, degree_two_dim, is_isotropic
from reflarr.resonance import beta_p

arr = catalog.build("monomial:2:3")
flats = compute_flat_table(arr)
print(arr, "degree two has dimension", degree_two_dim(flats))

rng = random.Random(1)
s = [rng.randint(-2, 2) for _ in range(arr.n)]
t = [rng.randint(-2, 2) for _ in range(arr.n)]
print("sigma =", s)
print("tau   =", t)
for X, comp in zip(flats.flats, cup(arr, flats, "Q", s, t).components):
    print("  flat", [arr.labels[h] for h in X.members], "->", [str(c) for c in comp])

# the diagonal class sigma_p kills every mod-p cocycle
arr = catalog.build("monomial:3:3")
flats = compute_flat_table(arr)
b = beta_p(arr, 3, flats)
print("sigma_3 . witness is zero:", cup(arr, flats, 3, [1] * arr.n, b.witness).is_zero())
print("span{sigma_3, witness} isotropic:", is_isotropic(arr, flats, 3, [[1] * arr.n, b.witness]))
