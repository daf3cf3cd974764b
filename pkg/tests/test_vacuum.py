import random

import pytest

from symqm.checks import random_state
from symqm.grassmann import Multivector, wedge
from symqm.liealg import build_su_basis
from symqm.poincare import PoincarePolynomial
from symqm.scalars import GQ
from symqm.vacuum import (
    PolyGrassState,
    Polynomial,
    apply_gauss_full,
    apply_hamiltonian,
    apply_q,
    apply_qbar,
    betti_via_singlets,
    gauss_action,
    primitive_label,
    singlet_dimension,
    singlet_dimension_float,
    trace_phi,
    trace_psi,
    trace_psi_naive,
    vacuum_basis,
    vacuum_states,
    verify_cayley_hamilton,
)
from symqm.weyl import poincare_closed_form


def test_su2_cubic_trace_value(su2):
    # Tr(sigma_a sigma_b sigma_c) e_a e_b e_c = 6 * 2i e_0 e_1 e_2
    assert trace_psi(su2, 3) == Multivector.monomial(3, [0, 1, 2], GQ(0, 12))


@pytest.mark.parametrize("n,powers", [(2, [1, 2, 3]), (3, [1, 2, 3, 4, 5])])
def test_matrix_power_trace_matches_index_sum(n, powers):
    b = build_su_basis(n)
    for p in powers:
        assert trace_psi(b, p) == trace_psi_naive(b, p)


def test_trace_psi_range(su2):
    with pytest.raises(ValueError):
        trace_psi(su2, 0)
    assert trace_psi(su2, 4).is_zero()
    assert trace_psi(su2, 5).is_zero()
    with pytest.raises(ValueError):
        trace_psi(build_su_basis(2, "orthonormal"), 3)


@pytest.mark.parametrize("n", [2, 3])
def test_even_traces_and_odd_squares_vanish(n):
    b = build_su_basis(n)
    for p in range(1, b.dim + 1):
        t = trace_psi(b, p)
        if p % 2 == 0:
            assert t.is_zero()
        else:
            assert wedge(t, t).is_zero()


@pytest.mark.parametrize("n", [2, 3])
def test_primitive_traces_are_invariant(n):
    b = build_su_basis(n)
    for p in range(3, 2 * n, 2):
        t = trace_psi(b, p)
        assert not t.is_zero()
        for a in range(b.dim):
            assert gauss_action(b, a, t).is_zero()


def test_generator_is_not_invariant(su3):
    x = Multivector.generator(su3.dim, 0)
    assert any(gauss_action(su3, a, x) for a in range(su3.dim))


def test_full_gauss_kills_bosonic_invariants(su3):
    st = PolyGrassState.product(su3, trace_phi(su3, 2) * trace_phi(su3, 3), trace_psi(su3, 3))
    for a in range(su3.dim):
        assert not apply_gauss_full(a, st)
    st = PolyGrassState.product(su3, Polynomial.variable(su3.dim, 0))
    assert any(apply_gauss_full(a, st) for a in range(su3.dim))


@pytest.mark.parametrize("n", [2, 3])
def test_singlet_methods_agree(n):
    b = build_su_basis(n)
    for k in range(b.dim + 1):
        w = singlet_dimension(b, k, "weight")
        assert w == singlet_dimension(b, k, "stacked")
        assert w == singlet_dimension_float(b, k)


def test_singlet_counts_su3(su3):
    assert betti_via_singlets(su3) == PoincarePolynomial((1, 0, 0, 1, 0, 1, 0, 0, 1))


def test_singlet_bad_args(su2):
    with pytest.raises(ValueError):
        singlet_dimension(su2, 4)
    with pytest.raises(ValueError):
        singlet_dimension(su2, 1, method="guess")


@pytest.mark.parametrize("n", [2, 3])
def test_vacuum_basis_sizes(n):
    b = build_su_basis(n)
    closed = poincare_closed_form(n)
    for k in range(b.dim + 1):
        assert len(vacuum_basis(b, k)) == closed[k]


def test_vacuum_labels(su3):
    assert [lab for lab, _ in vacuum_states(su3, 8)] == ["Tr(ψ̄^3)∧Tr(ψ̄^5)"]
    assert vacuum_states(su3, 4) == []
    assert vacuum_states(su3, 0)[0][0] == "1"
    assert primitive_label([3]) == "Tr(ψ̄^3)"


def test_cayley_hamilton_su2_su3(su2, su3):
    assert trace_psi(su2, 3)  # sanity: the primitive survives
    rep = verify_cayley_hamilton(su3, 3)
    assert rep.degree == 7
    assert rep.vanishes and rep.feasible
    with pytest.raises(ValueError):
        verify_cayley_hamilton(su3, 2)


@pytest.mark.parametrize("n", [2, 3])
def test_susy_algebra(n):
    b = build_su_basis(n)
    rng = random.Random(10 + n)
    for _ in range(3):
        s = random_state(b, rng)
        assert not apply_q(apply_q(s))
        assert not apply_qbar(apply_qbar(s))
        assert apply_q(apply_qbar(s)) + apply_qbar(apply_q(s)) == apply_hamiltonian(s).scale(2)


def test_qbar_on_cubic(su2):
    cubic = PolyGrassState.product(su2, trace_phi(su2, 3))
    expected = PolyGrassState(su2)
    for a in range(su2.dim):
        expected = expected + PolyGrassState.product(
            su2, trace_phi(su2, 2, left=a), Multivector.generator(su2.dim, a)
        ).scale(GQ(0, -3))
    assert apply_qbar(cubic) == expected
    assert not apply_hamiltonian(cubic)
    # a non-harmonic invariant is not annihilated
    assert apply_hamiltonian(PolyGrassState.product(su2, trace_phi(su2, 2)))


def test_vacuum_state_is_annihilated(su3):
    # the fermionic vacua carry no phi dependence, so Q, Qbar and H kill them
    for mv in vacuum_basis(su3, 5):
        s = PolyGrassState.product(su3, None, mv)
        assert not apply_q(s) and not apply_qbar(s) and not apply_hamiltonian(s)


def test_polynomial_arithmetic():
    x = Polynomial.variable(2, 0)
    y = Polynomial.variable(2, 1)
    p = (x + y) * (x - y)
    assert p == x * x - y * y
    assert p.diff(0) == x + x
    assert p.degree() == 2
    assert p([3, 1]) == 8
