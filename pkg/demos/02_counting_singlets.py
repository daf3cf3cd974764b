"""
Counting gauge singlets per fermion number
==========================================

Exact invariant-subspace dimensions against the product formula.
"""

import time

from symqm.liealg import build_su_basis
from symqm.poincare import su_factored
from symqm.vacuum import betti_via_singlets, vacuum_states
from symqm.weyl import poincare_closed_form, unconstrained_poincare

for n in (2, 3, 4):
    basis = build_su_basis(n)
    t0 = time.perf_counter()
    counts = betti_via_singlets(basis)
    dt = time.perf_counter() - t0
    print(f"SU({n}): {list(counts)}  ({dt:.2f}s)")
    print("   closed form", su_factored(n), "->", counts == poincare_closed_form(n))
    # without the Gauss law every monomial would count
    print("   unconstrained total", sum(unconstrained_poincare(n)), "vs", sum(counts))

# the vacua themselves, as wedge products of primitive traces
su3 = build_su_basis(3)
for k in (0, 3, 5, 8):
    for label, mv in vacuum_states(su3, k):
        print(f"k={k}: {label}  ({len(mv)} monomials)")
