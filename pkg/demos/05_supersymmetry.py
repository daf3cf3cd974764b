"""
Supercharges on polynomial states
=================================

States are polynomials in phi tensored with fermion multivectors.
"""

import random

import numpy as np

from symqm.checks import random_state
from symqm.grassmann import Multivector
from symqm.liealg import build_su_basis, laplacian_fd
from symqm.scalars import GQ
from symqm.vacuum import PolyGrassState, apply_hamiltonian, apply_q, apply_qbar, trace_phi

su2 = build_su_basis(2)
rng = random.Random(0)
s = random_state(su2, rng)
print("random state:", s)

print("Q^2 = 0:", not apply_q(apply_q(s)))
print("Qbar^2 = 0:", not apply_qbar(apply_qbar(s)))
print("{Q,Qbar} = 2H:", apply_q(apply_qbar(s)) + apply_qbar(apply_q(s)) == apply_hamiltonian(s).scale(2))

# Tr(phi^3) is harmonic, Tr(phi^2) is not
cubic = PolyGrassState.product(su2, trace_phi(su2, 3))
print("H Tr(phi^3) = 0:", not apply_hamiltonian(cubic))
target = PolyGrassState(su2)
for a in range(su2.dim):
    target = target + PolyGrassState.product(su2, trace_phi(su2, 2, left=a), Multivector.generator(3, a)).scale(GQ(0, -3))
print("Qbar Tr(phi^3) = -3i Tr(phi^2 psibar):", apply_qbar(cubic) == target)

# the same statement numerically, by finite differences
gm = build_su_basis(3, "orthonormal")
phi = np.random.default_rng(1).normal(size=gm.dim)
print("Lap Tr(phi^3) =", laplacian_fd(gm, 3, phi))
print("Lap Tr(phi^2) =", laplacian_fd(gm, 2, phi), "expected", 4 * gm.dim)
