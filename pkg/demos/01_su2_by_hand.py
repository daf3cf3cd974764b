"""
SU(2) by hand
=============

The smallest case: three Pauli matrices, one cubic fermion singlet.
"""

from symqm.grassmann import render
from symqm.liealg import build_su_basis
from symqm.vacuum import gauss_action, trace_psi

# rational basis; for SU(2) these are exactly the Pauli matrices
su2 = build_su_basis(2)
for name, t in zip(su2.labels(), su2.numeric()):
    print(name, t.tolist())

# [T_a, T_b] = i F_abc T_c, and F is twice the Levi-Civita symbol
F = su2.structure.F
print("F_012 =", F[0][1][2], " F_102 =", F[1][0][2])

# Tr(psibar^3) lives in the top degree
t3 = trace_psi(su2, 3)
print("Tr(psibar^3) =", render(t3))

# ...and every Gauss generator kills it
print("invariant:", all(gauss_action(su2, a, t3).is_zero() for a in range(3)))

# even powers vanish identically
print("Tr(psibar^2) =", render(trace_psi(su2, 2)))
