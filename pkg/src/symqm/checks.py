"""Invariant checks shared by ``symqm verify`` and the test-suite."""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass

import numpy as np

from .cohomology import CEDifferential, betti_via_cohomology
from .grassmann import Multivector, mask_of, wedge
from .liealg import LieBasis, build_su_basis, laplacian_fd
from .scalars import GQ, I
from .vacuum import (
    PolyGrassState,
    Polynomial,
    apply_hamiltonian,
    apply_q,
    apply_qbar,
    betti_via_singlets,
    gauss_action,
    trace_phi,
    trace_psi,
)
from .weyl import poincare_closed_form, poincare_via_ct


@dataclass
class Check:
    name: str
    passed: bool
    detail: str = ""

    @property
    def status(self) -> str:
        return "pass" if self.passed else "fail"

    def as_dict(self) -> dict:
        return {"name": self.name, "status": self.status, "detail": self.detail}


def random_gq(rng: random.Random, bound: int = 3) -> GQ:
    return GQ(rng.randint(-bound, bound), rng.randint(-bound, bound))


def random_multivector(dim: int, rng: random.Random, nterms: int = 6, degree: int | None = None) -> Multivector:
    terms = {}
    for _ in range(nterms):
        k = rng.randint(0, dim) if degree is None else degree
        terms[mask_of(rng.sample(range(dim), k))] = random_gq(rng)
    return Multivector(dim, terms)


def random_polynomial(dim: int, rng: random.Random, nterms: int = 4, max_degree: int = 3) -> Polynomial:
    terms = {}
    for _ in range(nterms):
        e = [0] * dim
        for _ in range(rng.randint(0, max_degree)):
            e[rng.randrange(dim)] += 1
        terms[tuple(e)] = random_gq(rng)
    return Polynomial(dim, terms)


def random_state(basis: LieBasis, rng: random.Random, nterms: int = 3) -> PolyGrassState:
    out = PolyGrassState(basis)
    for _ in range(nterms):
        out = out + PolyGrassState.product(
            basis, random_polynomial(basis.dim, rng), random_multivector(basis.dim, rng, nterms=3)
        )
    return out


def check_nilpotency(basis: LieBasis) -> Check:
    bad = []
    for n in range(2, basis.dim + 1, 2):
        if not trace_psi(basis, n).is_zero():
            bad.append(f"Tr(psibar^{n}) != 0")
    for n in range(1, basis.dim + 1, 2):
        t = trace_psi(basis, n)
        if not wedge(t, t).is_zero():
            bad.append(f"Tr(psibar^{n})^2 != 0")
    return Check("nilpotency", not bad, "; ".join(bad) or "even traces and odd squares vanish")


def check_susy_algebra(basis: LieBasis, samples: int = 4, seed: int = 0) -> Check:
    rng = random.Random(seed)
    bad = []
    for s in range(samples):
        st = random_state(basis, rng)
        if apply_q(apply_q(st)):
            bad.append(f"Q^2 != 0 on sample {s}")
        if apply_qbar(apply_qbar(st)):
            bad.append(f"Qbar^2 != 0 on sample {s}")
        anti = apply_q(apply_qbar(st)) + apply_qbar(apply_q(st))
        if anti != apply_hamiltonian(st).scale(2):
            bad.append(f"{{Q,Qbar}} != 2H on sample {s}")
    cubic = PolyGrassState.product(basis, trace_phi(basis, 3))
    if apply_hamiltonian(cubic):
        bad.append("H Tr(phi^3) != 0")
    expected = PolyGrassState(basis)
    for a in range(basis.dim):
        expected = expected + PolyGrassState.product(
            basis, trace_phi(basis, 2, left=a), Multivector.generator(basis.dim, a)
        ).scale(GQ(0, -3))
    if apply_qbar(cubic) != expected:
        bad.append("Qbar Tr(phi^3) != -3i Tr(phi^2 psibar)")
    return Check("susy_algebra", not bad, "; ".join(bad) or f"Q^2 = Qbar^2 = 0, {{Q,Qbar}} = 2H on {samples} states; Qbar and H on Tr(phi^3) as expected")


def gauss_commutator_defect(basis: LieBasis, x: Multivector) -> list[tuple[int, int]]:
    """Pairs ``(a, b)`` where ``[G_a, G_b] x != i F_abc G_c x``."""
    F = basis.structure.F
    dim = basis.dim
    g = [gauss_action(basis, c, x) for c in range(dim)]
    bad = []
    for a in range(dim):
        for b in range(a + 1, dim):
            lhs = gauss_action(basis, a, g[b]) - gauss_action(basis, b, g[a])
            rhs = Multivector(dim)
            for c in range(dim):
                if F[a][b][c]:
                    rhs = rhs + g[c].scale(I * F[a][b][c])
            if lhs != rhs:
                bad.append((a, b))
    return bad


def check_gauss_closure(basis: LieBasis, samples: int = 3, seed: int = 1) -> Check:
    rng = random.Random(seed)
    bad = []
    for s in range(samples):
        x = random_multivector(basis.dim, rng, nterms=5)
        bad += gauss_commutator_defect(basis, x)
    return Check("gauss_closure", not bad, f"failing pairs {bad}" if bad else f"[G_a,G_b] = iF_abc G_c on {samples} samples")


def check_d_squared(basis: LieBasis, per_degree: int = 12, seed: int = 2) -> Check:
    d = CEDifferential(basis)
    rng = random.Random(seed)
    bad = []
    for k in range(basis.dim - 1):
        if len(list(itertools.islice(itertools.combinations(range(basis.dim), k), per_degree + 1))) <= per_degree:
            xs = [Multivector.monomial(basis.dim, idx) for idx in itertools.combinations(range(basis.dim), k)]
        else:
            xs = [random_multivector(basis.dim, rng, nterms=4, degree=k) for _ in range(per_degree)]
        for x in xs:
            if d(d(x)):
                bad.append(k)
                break
    return Check("d_squared", not bad, f"d^2 != 0 in degrees {bad}" if bad else "d^2 = 0 in every degree")


def check_tri_oracle(basis: LieBasis, known: dict | None = None) -> Check:
    """``known`` may carry already computed ``singlets``/``cohomology`` results."""
    n = basis.n
    closed = poincare_closed_form(n)
    known = known or {}
    results = {
        "singlets": known.get("singlets") or betti_via_singlets(basis),
        "cohomology": known.get("cohomology") or betti_via_cohomology(basis),
        "weyl-ct": poincare_via_ct(n),
    }
    bad = [k for k, v in results.items() if v != closed]
    detail = ", ".join(f"{k}={list(v)}" for k, v in results.items())
    return Check("betti_tri_oracle", not bad, detail)


def check_harmonicity(n: int, points: int = 10, seed: int = 3, tol: float = 1e-6) -> Check:
    basis = build_su_basis(n, "orthonormal")
    rng = np.random.default_rng(seed)
    worst3 = 0.0
    worst2 = 0.0
    for _ in range(points):
        phi = rng.normal(size=basis.dim)
        worst3 = max(worst3, abs(laplacian_fd(basis, 3, phi)))
        worst2 = max(worst2, abs(laplacian_fd(basis, 2, phi) - 4 * basis.dim))
    ok = worst3 < tol and worst2 < tol
    return Check("harmonicity", ok, f"max |Lap Tr(phi^3)| = {worst3:.2e}, max |Lap Tr(phi^2) - 4(N^2-1)| = {worst2:.2e}")


def run_all(n: int, known: dict | None = None) -> list[Check]:
    basis = build_su_basis(n)
    return [
        check_nilpotency(basis),
        check_susy_algebra(basis),
        check_gauss_closure(basis),
        check_d_squared(basis),
        check_tri_oracle(basis, known),
        check_harmonicity(n),
    ]
