import math
from collections import defaultdict
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from symqm.poincare import PoincarePolynomial, binomial_row
from symqm.weyl import (
    ADJOINT_LABELS,
    MINUS,
    LaurentPoly,
    adjoint_character,
    constant_term_of_product,
    exterior_character,
    frobenius_exterior_character,
    integrand_bandwidth,
    measure_normalization,
    poincare_closed_form,
    poincare_via_ct,
    quadrature_check,
    root_product,
    torus_point,
    unconstrained_poincare,
    vandermonde,
    weyl_character_determinant,
)


def naive_ct_poincare(n):
    """Same torus integral with plain dict polynomials in (z-exponents, t-degree)."""
    poly = {((0,) * n, 0): 1}
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            e = [0] * n
            e[i] += 1
            e[j] -= 1
            # (1 - x)(1 + t x)
            factor = {((0,) * n, 0): 1, (tuple(e), 0): -1, (tuple(e), 1): 1, (tuple(2 * v for v in e), 1): -1}
            out = defaultdict(int)
            for (pe, pt), pc in poly.items():
                for (fe, ft), fc in factor.items():
                    out[(tuple(a + b for a, b in zip(pe, fe)), pt + ft)] += pc * fc
            poly = {k: v for k, v in out.items() if v}
    ct = defaultdict(int)
    for (e, tdeg), c in poly.items():
        if not any(e):
            ct[tdeg] += c
    coeffs = [ct[k] for k in range(max(ct) + 1)]
    for _ in range(n - 1):
        coeffs = [a + b for a, b in zip(coeffs + [0], [0] + coeffs)]
    return [Fraction(c, math.factorial(n)) for c in coeffs]


@pytest.mark.parametrize("n", [2, 3])
def test_ct_matches_naive_expansion(n):
    got = list(poincare_via_ct(n))
    ref = naive_ct_poincare(n)
    ref += [0] * (len(got) - len(ref))
    assert got == ref


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_ct_matches_closed_form(n):
    assert poincare_via_ct(n) == poincare_closed_form(n)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_minus_convention_is_substitution(n):
    assert poincare_via_ct(n, MINUS) == poincare_closed_form(n).substitute_minus_t()


def test_minus_convention_su2():
    assert str(poincare_via_ct(2, MINUS)) == "1 - t^3"


def test_unknown_convention():
    with pytest.raises(ValueError):
        poincare_via_ct(2, "minus-ish")


@pytest.mark.parametrize("n", [2, 3, 4])
def test_unconstrained(n):
    p = unconstrained_poincare(n)
    assert list(p) == binomial_row(n * n - 1)
    assert p.evaluate(1) == 2 ** (n * n - 1)


@pytest.mark.parametrize("n", [2, 3])
def test_closed_form_properties(n):
    p = poincare_closed_form(n)
    assert p.evaluate(1) == 2 ** (n - 1)
    assert p.evaluate(-1) == 0
    assert p.is_palindromic()
    assert p.top_degree == n * n - 1


@given(st.lists(st.floats(-3, 3), min_size=2, max_size=2))
@settings(max_examples=30)
def test_adjoint_character_matches_weyl_determinant(angles):
    z = torus_point(angles)
    if min(abs(z[i] - z[j]) for i in range(3) for j in range(i + 1, 3)) < 1e-3:
        return
    lhs = adjoint_character(3).evaluate(z[:-1] / z[-1])
    rhs = weyl_character_determinant(3, ADJOINT_LABELS(3), angles)
    assert lhs == pytest.approx(rhs, abs=1e-9)


def test_adjoint_dimension():
    for n in (2, 3, 4):
        assert adjoint_character(n).evaluate([1] * (n - 1)) == pytest.approx(n * n - 1)


def test_weyl_determinant_errors():
    with pytest.raises(ValueError):
        weyl_character_determinant(3, [0, 1, 0], [0.1, 0.2])
    with pytest.raises(ValueError):
        weyl_character_determinant(3, [2, 1, 0], [0.0, 0.0, 0.0])


def test_vandermonde_squared_is_root_product():
    n = 3
    v = vandermonde(n)
    assert v * v.conjugate() == root_product(n)


@given(st.lists(st.integers(-4, 4), min_size=1, max_size=6))
def test_newton_matches_frobenius(p):
    for m in range(len(p) + 1):
        e = exterior_character(p, m)
        assert e == frobenius_exterior_character(p, m)
        assert frobenius_exterior_character(p, m, sign="alternating") == (-1) ** m * e


def test_exterior_character_of_diagonal():
    # eigenvalues 1, 2, 3: e_2 = 11
    x = [1, 2, 3]
    p = [sum(v**k for v in x) for k in range(1, 4)]
    assert exterior_character(p, 2) == 11
    assert exterior_character(p, 3) == 6
    arr = exterior_character([np.array([6.0]), np.array([14.0])], 2)
    assert arr[0] == pytest.approx(11)
    with pytest.raises(ValueError):
        exterior_character(p, -1)


def test_laurent_arithmetic():
    x = LaurentPoly.monomial(2, [1, 0])
    y = LaurentPoly.monomial(2, [0, -1], 3)
    p = (x + y) ** 2
    assert p.coefficient([2, 0]) == (1,)
    assert p.coefficient([1, -1]) == (6,)
    assert p.coefficient([0, -2]) == (9,)
    assert p.constant_term() == ()
    q = p * p.conjugate()
    assert constant_term_of_product(p, p.conjugate()) == q.constant_term() == (1 + 36 + 81,)
    assert (p - p) == LaurentPoly(2)


def test_negative_exponents_survive_packing():
    x = LaurentPoly.monomial(3, [-5, 7, -1], -2)
    assert list(x.items()) == [((-5, 7, -1), (-2,))]
    assert x.max_abs_exponent() == 7


@pytest.mark.parametrize("n,grid", [(2, 16), (3, 32)])
def test_quadrature(n, grid):
    res = quadrature_check(n, grid)
    assert res.exact_grid
    assert res.max_deviation < 1e-8
    assert res.rounded == poincare_closed_form(n)
    assert measure_normalization(n, grid) == pytest.approx(1.0, abs=1e-12)


def test_quadrature_too_coarse_warns():
    assert integrand_bandwidth(3) == 4
    with pytest.warns(UserWarning):
        res = quadrature_check(3, grid=6)
    assert res.rounded is None


def test_quadrature_minus_convention():
    res = quadrature_check(2, 16, MINUS)
    assert res.rounded == PoincarePolynomial((1, 0, 0, -1))
