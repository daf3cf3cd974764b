"""Exact vacuum-state construction for SU(N) supersymmetric matrix quantum mechanics."""

__version__ = "0.1.0"

from .cohomology import CEDifferential, betti_via_cohomology, ce_differential, is_coboundary, is_cocycle
from .grassmann import Multivector, annihilate, create, render, wedge
from .liealg import LieBasis, build_su_basis, structure_constants, trace_product
from .poincare import PoincarePolynomial
from .scalars import GaussianRational
from .vacuum import (
    apply_gauss_full,
    apply_hamiltonian,
    apply_q,
    apply_qbar,
    betti_via_singlets,
    gauss_action,
    singlet_dimension,
    trace_psi,
    vacuum_basis,
    vacuum_states,
    verify_cayley_hamilton,
)
from .weyl import poincare_closed_form, poincare_via_ct, quadrature_check, unconstrained_poincare

__all__ = [
    "CEDifferential",
    "GaussianRational",
    "LieBasis",
    "Multivector",
    "PoincarePolynomial",
    "annihilate",
    "apply_gauss_full",
    "apply_hamiltonian",
    "apply_q",
    "apply_qbar",
    "betti_via_cohomology",
    "betti_via_singlets",
    "build_su_basis",
    "ce_differential",
    "create",
    "gauss_action",
    "is_coboundary",
    "is_cocycle",
    "poincare_closed_form",
    "poincare_via_ct",
    "quadrature_check",
    "render",
    "singlet_dimension",
    "structure_constants",
    "trace_product",
    "trace_psi",
    "unconstrained_poincare",
    "vacuum_basis",
    "vacuum_states",
    "verify_cayley_hamilton",
    "wedge",
]
