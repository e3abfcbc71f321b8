"""
Decoding radius and failure bounds
==================================

tau(ell) is the radius up to which the decoder is expected to work.  The
failure-probability bound for ell = 3 is tabulated for the [250,30] code over
GF(251).
"""

from powerdecoding.bounds import best_ell, pf_bound_l2, pf_bound_l3, tau

n, k, q = 250, 30, 251
for ell in (1, 2, 3, 4):
    print(f"tau({ell}) = {float(tau(n, k, ell)):.2f}")
print("best ell up to 4:", best_ell(n, k, 4))

print("eps   pf_l2        pf_l3")
for eps in (120, 130, 135, 138, 139, 143, 144):
    print(f"{eps:3d}  {pf_bound_l2(q, n, k, eps):10.3g}  {pf_bound_l3(q, n, k, eps):10.3g}")
