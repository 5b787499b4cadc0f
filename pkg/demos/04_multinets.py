"""
Multinets: checking, building and searching
===========================================

A k-multinet is a partition of the hyperplanes into k blocks with weights
such that every flat met by two blocks has the same weighted count in each.
"""

from reflarr import catalog
from reflarr.arrangement import compute_flat_table
from reflarr.multinet import (fy_monomial_3net, full_monomial_multinet, hessian_4net,
                              mod3_net, multinet_subspace, search_nets,
                              subspace_intersection_dim, subspace_is_isotropic, verify)

arr = catalog.build("monomial:3:3")
flats = compute_flat_table(arr)
for name, net in (("directions", fy_monomial_3net(3)), ("a mod 3", mod3_net(3))):
    rep = verify(arr, flats, net)
    print(f"{name:10s} valid={rep.valid} n_X values={sorted(set(rep.cross_flat_values.values()))}"
          f" isotropic={subspace_is_isotropic(arr, flats, net)}")

# the two pulled-back planes meet only in zero
u = multinet_subspace(arr, fy_monomial_3net(3))
v = multinet_subspace(arr, mod3_net(3))
print("dim of intersection:", subspace_intersection_dim(u, v))

# weights m on the coordinate hyperplanes of A(m,1,3)
for m in (2, 4, 7):
    a = catalog.build(f"full-monomial:{m}:3")
    rep = verify(a, None, full_monomial_multinet(m))
    print(f"A({m},1,3): valid={rep.valid} weights = 1 mod {rep.reduced_mod or '-'}")

# exhaustive search finds exactly one 4-net on the Hessian arrangement
h = catalog.build("hessian")
nets = search_nets(h, None, 4)
print(len(nets), "4-net(s):")
for block in nets[0].blocks:
    print("   ", " ".join(block))
print("matches the four triangles:",
      sorted(map(sorted, nets[0].blocks)) == sorted(map(sorted, hessian_4net().blocks)))
