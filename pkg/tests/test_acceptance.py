"""Acceptance criteria, one test each, at the stated tolerances.

Each test records a one-line PASS/FAIL verdict that is printed in the
terminal summary (and directly when run as ``python tests/test_acceptance.py``).
"""

import itertools
import random
import time

import numpy as np
import pytest

from conftest import ACCEPTANCE_LINES
from symqm.checks import check_gauss_closure, check_susy_algebra, gauss_commutator_defect, random_multivector
from symqm.cohomology import betti_via_cohomology, is_coboundary, is_cocycle
from symqm.grassmann import wedge
from symqm.liealg import build_su_basis, laplacian_fd
from symqm.poincare import PoincarePolynomial, binomial_row
from symqm.vacuum import (
    betti_via_singlets,
    gauss_action,
    trace_psi,
    vacuum_basis,
)
from symqm.weyl import MINUS, poincare_closed_form, poincare_via_ct, quadrature_check, unconstrained_poincare


def record(num, title, ok, detail):
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {num:2d}: {title} | {detail}"
    ACCEPTANCE_LINES[num] = line
    print(line)
    assert ok, line


def test_01_tri_oracle(bases):
    details, ok = [], True
    for n in (2, 3, 4):
        b = bases[n]
        t0 = time.perf_counter()
        closed = poincare_closed_form(n)
        got = [betti_via_singlets(b), betti_via_cohomology(b), poincare_via_ct(n)]
        same = all(isinstance(x, int) for p in got for x in p) and all(p == closed for p in got)
        ok &= same
        details.append(f"N={n} {'agree' if same else got} ({time.perf_counter() - t0:.1f}s)")
    record(1, "singlets = cohomology = constant term = closed form, N=2..4", ok, "; ".join(details))


def test_02_constant_term_large_n():
    details, ok = [], True
    for n in (5, 6):
        t0 = time.perf_counter()
        p = poincare_via_ct(n)
        dt = time.perf_counter() - t0
        good = p == poincare_closed_form(n) and dt < 60
        ok &= good
        details.append(f"N={n} {'match' if p == poincare_closed_form(n) else str(p)} in {dt:.2f}s")
    record(2, "constant-term pipeline alone for N=5,6", ok, "; ".join(details))


def test_03_nilpotency(bases):
    bad = []
    for n in (2, 3, 4):
        b = bases[n]
        for k in range(1, b.dim + 1):
            t = trace_psi(b, k)
            if k % 2 == 0 and not t.is_zero():
                bad.append(f"N={n} Tr^{k}")
            if k % 2 == 1 and not wedge(t, t).is_zero():
                bad.append(f"N={n} (Tr^{k})^2")
    record(3, "even traces and odd trace squares vanish, N=2..4", not bad, ", ".join(bad) or "all zero")


def test_04_cayley_hamilton(bases):
    cases = [(2, 5), (3, 7), (4, 9), (4, 11)]
    bad = [f"SU({n}) Tr^{k}" for n, k in cases if not trace_psi(bases[n], k).is_zero()]
    # the surviving primitives are genuinely nonzero
    alive = all(not trace_psi(bases[n], k).is_zero() for n in (2, 3, 4) for k in range(3, 2 * n, 2))
    record(4, "higher odd traces vanish", not bad and alive, ", ".join(bad) or "Tr^5|2, Tr^7|3, Tr^9|4, Tr^11|4 are 0")


def test_05_vacuum_structure(bases):
    problems, counts = [], []
    for n in (2, 3, 4):
        b = bases[n]
        closed = poincare_closed_form(n)
        dims = []
        for k in range(b.dim + 1):
            states = vacuum_basis(b, k)
            dims.append(len(states))
            for mv in states:
                if any(gauss_action(b, a, mv) for a in range(b.dim)):
                    problems.append(f"N={n} k={k} not invariant")
                if not is_cocycle(b, mv):
                    problems.append(f"N={n} k={k} not closed")
                if is_coboundary(b, mv):
                    problems.append(f"N={n} k={k} exact")
        if PoincarePolynomial(tuple(dims)) != closed:
            problems.append(f"N={n} dims {dims}")
        counts.append(f"N={n} {sum(dims)} states")
    record(5, "vacua are invariant, closed, not exact; dims match", not problems, "; ".join(problems or counts))


def test_06_operator_identities(bases):
    checks = [check_susy_algebra(bases[n], samples=4, seed=100 + n) for n in (2, 3)]
    ok = all(c.passed for c in checks)
    record(6, "Q^2 = Qbar^2 = 0, {Q,Qbar} = 2H, Qbar Tr(phi^3), H Tr(phi^3) = 0", ok, "; ".join(c.detail for c in checks))


def test_07_gauss_closure(bases):
    rng = random.Random(7)
    bad = []
    for n in (2, 3):
        b = bases[n]
        for _ in range(3):
            bad += [(n, p) for p in gauss_commutator_defect(b, random_multivector(b.dim, rng, nterms=6))]
        assert check_gauss_closure(b).passed
    record(7, "[G_a,G_b] = i F_abc G_c, N=2,3", not bad, f"failing {bad}" if bad else "closes on random states")


def test_08_unconstrained():
    bad = [n for n in (2, 3, 4) if list(unconstrained_poincare(n)) != binomial_row(n * n - 1)]
    # an independent count: all monomials of each degree, no constraint
    for n in (2, 3):
        dim = n * n - 1
        direct = [sum(1 for _ in itertools.combinations(range(dim), k)) for k in range(dim + 1)]
        if direct != list(unconstrained_poincare(n)):
            bad.append(n)
    record(8, "unconstrained counts (1+t)^(N^2-1), N=2..4", not bad, f"bad N {bad}" if bad else "binomial rows")


def test_09_harmonicity():
    rng = np.random.default_rng(2024)
    worst3 = worst2 = 0.0
    for n in (2, 3):
        b = build_su_basis(n, "orthonormal")
        for _ in range(10):
            phi = rng.normal(size=b.dim)
            worst3 = max(worst3, abs(laplacian_fd(b, 3, phi)))
            worst2 = max(worst2, abs(laplacian_fd(b, 2, phi) - 4 * b.dim))
    ok = worst3 < 1e-6 and worst2 < 1e-6
    record(9, "Lap Tr(phi^3) = 0, Lap Tr(phi^2) = 4(N^2-1), tol 1e-6", ok, f"max errors {worst3:.1e}, {worst2:.1e}")


def test_10_quadrature():
    details, ok = [], True
    for n, grid in ((2, 16), (3, 32)):
        res = quadrature_check(n, grid)
        good = res.max_deviation < 1e-8 and res.rounded == poincare_closed_form(n)
        ok &= good
        details.append(f"N={n} grid {grid}: deviation {res.max_deviation:.1e}")
    record(10, "trapezoid Weyl integral gives integer Betti numbers", ok, "; ".join(details))


def test_11_sign_convention():
    results = {n: poincare_via_ct(n, MINUS) for n in (2, 3, 4)}
    ok = all(p == poincare_closed_form(n).substitute_minus_t() for n, p in results.items())
    ok &= str(results[2]) == "1 - t^3"
    record(11, "minus-sign convention yields P(-t)", ok, f"SU(2): {results[2]}; SU(3): {results[3]}")


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-q", "-s"]))
