"""
Vacua as Lie algebra cocycles
=============================

Identify psibar_a with the left-invariant form theta^a and compare.
"""

from symqm.cohomology import CEDifferential, betti_via_cohomology, is_coboundary, is_cocycle
from symqm.grassmann import Multivector, render
from symqm.liealg import build_su_basis
from symqm.vacuum import trace_psi

su3 = build_su_basis(3)
d = CEDifferential(su3)

# d of a single generator is a 2-form
print("d e_2 =", render(d(Multivector.generator(su3.dim, 2))))

# d^2 = 0 on a 3-form
x = Multivector.monomial(su3.dim, [0, 3, 6])
print("d(d x) = 0:", d(d(x)).is_zero())

# the trace operators are closed but not exact
for k in (3, 5):
    t = trace_psi(su3, k)
    print(f"Tr(psibar^{k}): closed={is_cocycle(su3, t)} exact={is_coboundary(su3, t)}")

# anything of the form d y is exact, of course
print("d x exact:", is_coboundary(su3, d(x)))

# Betti numbers from exact ranks, blockwise by torus weight
for n in (2, 3, 4):
    print(f"SU({n}) cohomology:", list(betti_via_cohomology(build_su_basis(n))))
