"""SU(N) generators, structure tensors and trace polynomials.

Convention: ``[T_a, T_b] = i F_abc T_c`` with the last index of ``F`` the
output slot.  With Gell-Mann normalisation ``Tr(T_a T_b) = 2 delta_ab`` this
gives ``F = 2 f`` for the usual ``f_abc`` (``F = 2 eps`` for Pauli matrices).

Two bases are available:

``orthonormal``
    generalized Gell-Mann matrices, floating complex entries.
``rational``
    the same off-diagonal pairs ``E_ij + E_ji`` and ``-i(E_ij - E_ji)``
    together with unnormalised diagonals ``diag(1, .., 1, -k, 0, ..)``.
    Entries are Gaussian rationals, the Gram matrix is diagonal, and every
    structure constant is rational.  This basis drives all exact counting.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Sequence

import numpy as np
from gmpy2 import mpq

from .scalars import GQ, I, ONE, ZERO

ORTHONORMAL = "orthonormal"
RATIONAL = "rational"


def _generator_layout(n: int):
    """Gell-Mann ordering: for each column k, the pairs (i, k), i < k, then D_k."""
    out = []
    for k in range(1, n):
        for i in range(k):
            out.append(("sym", i, k))
            out.append(("asym", i, k))
        out.append(("diag", k, k))
    return out


@dataclass(frozen=True, eq=False)
class LieBasis:
    n: int
    kind: str
    generators: tuple  # N x N ndarrays, complex128 or object(GQ)

    @property
    def dim(self) -> int:
        return self.n * self.n - 1

    @property
    def exact(self) -> bool:
        return self.kind == RATIONAL

    def labels(self) -> list[str]:
        names = []
        for kind, i, k in _generator_layout(self.n):
            names.append({"sym": f"S{i}{k}", "asym": f"A{i}{k}", "diag": f"D{k}"}[kind])
        return names

    def numeric(self) -> list[np.ndarray]:
        """Generators as complex128 arrays (exact entries converted)."""
        if not self.exact:
            return list(self.generators)
        return [np.vectorize(complex, otypes=[complex])(t) for t in self.generators]

    @cached_property
    def structure(self) -> "StructureTensors":
        return structure_constants(self)

    @cached_property
    def _trace_cache(self) -> dict:
        return {}


def build_su_basis(n: int, kind: str = RATIONAL) -> LieBasis:
    """Generators of su(N) in the fundamental representation."""
    if int(n) != n or n < 2:
        raise ValueError(f"SU(N) needs N >= 2, got {n!r}")
    if kind not in (ORTHONORMAL, RATIONAL):
        raise ValueError(f"unknown basis kind {kind!r}")
    n = int(n)
    gens = []
    for typ, i, k in _generator_layout(n):
        if kind == RATIONAL:
            m = np.full((n, n), ZERO, dtype=object)
            if typ == "sym":
                m[i, k] = m[k, i] = ONE
            elif typ == "asym":
                m[i, k] = -I
                m[k, i] = I
            else:
                for j in range(k):
                    m[j, j] = ONE
                m[k, k] = GQ(-k)
        else:
            m = np.zeros((n, n), dtype=complex)
            if typ == "sym":
                m[i, k] = m[k, i] = 1
            elif typ == "asym":
                m[i, k] = -1j
                m[k, i] = 1j
            else:
                scale = np.sqrt(2.0 / (k * (k + 1)))
                m[:k, :k] = np.eye(k) * scale
                m[k, k] = -k * scale
        gens.append(m)
    return LieBasis(n, kind, tuple(gens))


def _trace(m):
    s = m[0, 0]
    for j in range(1, m.shape[0]):
        s = s + m[j, j]
    return s


def _exact_inverse(g: list[list[mpq]]) -> list[list[mpq]]:
    n = len(g)
    aug = [list(map(mpq, row)) + [mpq(int(i == j)) for j in range(n)] for i, row in enumerate(g)]
    for c in range(n):
        p = next((r for r in range(c, n) if aug[r][c]), None)
        if p is None:
            raise ArithmeticError("singular Gram matrix")
        aug[c], aug[p] = aug[p], aug[c]
        pv = aug[c][c]
        aug[c] = [v / pv for v in aug[c]]
        for r in range(n):
            if r != c and aug[r][c]:
                f = aug[r][c]
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[c])]
    return [row[n:] for row in aug]


@dataclass(frozen=True, eq=False)
class StructureTensors:
    """``F[a][b][c]``, ``d[a][b][c]`` (orthonormal only) and ``g[a][b]``.

    Exact bases hold ``mpq`` entries in nested lists; orthonormal bases hold
    float ndarrays.
    """

    F: object
    d: object
    g: object
    ginv: object = field(repr=False)

    def f_nonzero(self) -> dict:
        """``{(a, b): [(c, F_abc), ...]}`` for nonzero entries."""
        out = {}
        dim = len(self.g)
        for a in range(dim):
            for b in range(dim):
                row = [(c, self.F[a][b][c]) for c in range(dim) if self.F[a][b][c]]
                if row:
                    out[(a, b)] = row
        return out


def _coords(basis: LieBasis, ginv, m) -> list:
    """Expansion coefficients of a traceless matrix in the basis."""
    traces = [_trace(t @ m) for t in basis.generators]
    dim = basis.dim
    if basis.exact:
        return [sum((traces[b] * ginv[a][b] for b in range(dim)), ZERO) for a in range(dim)]
    return list(np.asarray(ginv) @ np.asarray(traces))


def structure_constants(basis: LieBasis) -> StructureTensors:
    """Solve ``[T_a, T_b] = i F_abc T_c`` (and ``d`` for orthonormal kind)."""
    dim = basis.dim
    gens = basis.generators
    if basis.exact:
        g = [[_trace(ta @ tb) for tb in gens] for ta in gens]
        for row in g:
            for v in row:
                assert v.is_real
        g = [[v.re for v in row] for row in g]
        ginv = _exact_inverse(g)
        F = [[[mpq(0)] * dim for _ in range(dim)] for _ in range(dim)]
        for a in range(dim):
            for b in range(a + 1, dim):
                comm = gens[a] @ gens[b] - gens[b] @ gens[a]
                for c, z in enumerate(_coords(basis, ginv, comm)):
                    # z = i F  ->  F = -i z
                    val = z * (-I)
                    if val.im:
                        raise ArithmeticError("non-real structure constant")
                    F[a][b][c] = val.re
                    F[b][a][c] = -val.re
        return StructureTensors(F=F, d=None, g=g, ginv=ginv)
    g = np.array([[np.trace(ta @ tb) for tb in gens] for ta in gens])
    if abs(np.linalg.det(g.real)) < 1e-12:
        raise ArithmeticError("singular Gram matrix")
    ginv = np.linalg.inv(g.real)
    F = np.zeros((dim, dim, dim))
    d = np.zeros((dim, dim, dim))
    n = basis.n
    for a in range(dim):
        for b in range(dim):
            comm = gens[a] @ gens[b] - gens[b] @ gens[a]
            anti = gens[a] @ gens[b] + gens[b] @ gens[a] - (2 * g[a, b].real / n) * np.eye(n)
            F[a, b] = (-1j * np.array(_coords(basis, ginv, comm))).real
            d[a, b] = 0.5 * np.array(_coords(basis, ginv, anti)).real
    return StructureTensors(F=F, d=d, g=g.real, ginv=ginv)


def trace_product(basis: LieBasis, indices: Sequence[int]):
    """``Tr(T_{a1} ... T_{ak})`` in the basis's scalar kind."""
    if not len(indices):
        raise ValueError("need at least one generator index")
    for a in indices:
        if not 0 <= a < basis.dim:
            raise IndexError(f"generator index {a} out of range for su({basis.n})")
    key = tuple(indices)
    cache = basis._trace_cache
    if key in cache:
        return cache[key]
    m = basis.generators[indices[0]]
    for a in indices[1:]:
        m = m @ basis.generators[a]
    val = _trace(m)
    if len(cache) < 100_000:
        cache[key] = val
    return val


def phi_matrix(basis: LieBasis, phi) -> np.ndarray:
    phi = np.asarray(phi, dtype=float)
    if phi.shape != (basis.dim,):
        raise ValueError(f"phi must have length {basis.dim}")
    gens = basis.numeric()
    return np.tensordot(phi, np.array(gens), axes=1)


def eval_trace_polynomial(basis: LieBasis, phi, n: int) -> float:
    """``Tr((phi_a T_a)^n)`` at a real point."""
    if n < 2:
        raise ValueError("trace power must be >= 2")
    val = np.trace(np.linalg.matrix_power(phi_matrix(basis, phi), n))
    return float(val.real)


def laplacian_fd(basis: LieBasis, n: int, phi, h: float = 1e-3) -> float:
    """Central-difference Laplacian of ``Tr(phi^n)`` with one Richardson step.

    Sums second derivatives along the coordinate axes phi_a.  For the
    orthonormal basis this is the flat Laplacian ``p_a p_a``; for other bases
    use :func:`metric_laplacian_fd`.
    """
    if h <= 0:
        raise ValueError("step must be positive")
    return _fd_laplacian(basis, n, phi, h, np.eye(basis.dim))


def metric_laplacian_fd(basis: LieBasis, n: int, phi, h: float = 1e-3) -> float:
    """Invariant Laplacian ``2 g^{ab} d_a d_b`` (equals the flat one for Gell-Mann)."""
    if h <= 0:
        raise ValueError("step must be positive")
    ginv = np.array(basis.structure.ginv, dtype=float)
    return _fd_laplacian(basis, n, phi, h, 2.0 * ginv)


def _fd_laplacian(basis, n, phi, h, metric):
    phi = np.asarray(phi, dtype=float)
    f = lambda x: eval_trace_polynomial(basis, x, n)
    f0 = f(phi)
    dim = basis.dim

    def second(u, v, step):
        if u == v:
            e = np.zeros(dim)
            e[u] = step
            return (f(phi + e) - 2 * f0 + f(phi - e)) / step**2
        eu = np.zeros(dim)
        ev = np.zeros(dim)
        eu[u] = step
        ev[v] = step
        return (f(phi + eu + ev) - f(phi + eu - ev) - f(phi - eu + ev) + f(phi - eu - ev)) / (4 * step**2)

    def lap(step):
        total = 0.0
        for u in range(dim):
            for v in range(dim):
                if metric[u, v]:
                    total += metric[u, v] * second(u, v, step)
        return total

    coarse, fine = lap(h), lap(h / 2)
    return (4 * fine - coarse) / 3


# -- weight frame -------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class WeightFrame:
    """Cartan-Weyl basis of sl(N, C) expressed in an exact basis.

    Elements are ``E_ij`` (i != j) followed by ``H_k = E_kk - E_{k+1,k+1}``.
    ``to_frame[a]`` lists ``(alpha, P[a][alpha])`` so that the dual coordinate
    ``theta^a`` equals ``sum_alpha P[a][alpha] omega^alpha``; ``from_frame``
    is the inverse map.  ``weights[alpha]`` is the coadjoint weight of
    ``omega^alpha`` as an integer vector of length N (sums to zero).
    ``bracket[(beta, gamma)]`` lists ``(alpha, C)`` with
    ``[W_beta, W_gamma] = sum C W_alpha`` (integers).
    """

    basis: LieBasis
    labels: tuple
    weights: tuple
    to_frame: tuple
    from_frame: tuple
    bracket: dict
    raising: tuple  # frame indices of E_{k,k+1}


def _frame_matrices(n):
    mats, labels = [], []
    for i in range(n):
        for j in range(n):
            if i != j:
                m = np.full((n, n), ZERO, dtype=object)
                m[i, j] = ONE
                mats.append(m)
                labels.append(("E", i, j))
    for k in range(n - 1):
        m = np.full((n, n), ZERO, dtype=object)
        m[k, k] = ONE
        m[k + 1, k + 1] = GQ(-1)
        mats.append(m)
        labels.append(("H", k, k + 1))
    return mats, labels


def _gq_inverse(p):
    n = len(p)
    aug = [list(row) + [ONE if i == j else ZERO for j in range(n)] for i, row in enumerate(p)]
    for c in range(n):
        piv = next(r for r in range(c, n) if aug[r][c])
        aug[c], aug[piv] = aug[piv], aug[c]
        pv = aug[c][c]
        aug[c] = [v / pv for v in aug[c]]
        for r in range(n):
            if r != c and aug[r][c]:
                f = aug[r][c]
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[c])]
    return [row[n:] for row in aug]


def weight_frame(basis: LieBasis) -> WeightFrame:
    if not basis.exact:
        raise ValueError("weight frame needs an exact (rational) basis")
    cached = basis.__dict__.get("_weight_frame")
    if cached is not None:
        return cached
    n, dim = basis.n, basis.dim
    ginv = basis.structure.ginv
    mats, labels = _frame_matrices(n)
    # P[a][alpha]: T-coordinate a of W_alpha
    cols = [_coords(basis, ginv, m) for m in mats]
    P = [[cols[al][a] for al in range(dim)] for a in range(dim)]
    Pinv = _gq_inverse(P)
    to_frame = tuple(tuple((al, P[a][al]) for al in range(dim) if P[a][al]) for a in range(dim))
    from_frame = tuple(tuple((a, Pinv[al][a]) for a in range(dim) if Pinv[al][a]) for al in range(dim))

    def frame_coords(m):
        tc = _coords(basis, ginv, m)
        return [sum((Pinv[al][a] * tc[a] for a in range(dim)), ZERO) for al in range(dim)]

    bracket = {}
    for b in range(dim):
        for c in range(dim):
            comm = mats[b] @ mats[c] - mats[c] @ mats[b]
            if not any(x for x in comm.flat):
                continue
            row = []
            for al, z in enumerate(frame_coords(comm)):
                if z:
                    assert z.is_real and z.re.denominator == 1
                    row.append((al, int(z.re)))
            bracket[(b, c)] = tuple(row)
    weights = []
    for lab in labels:
        w = [0] * n
        if lab[0] == "E":
            # omega^{E_ij} pairs with E_ij, weight -(e_i - e_j)
            w[lab[1]] -= 1
            w[lab[2]] += 1
        weights.append(tuple(w))
    raising = tuple(labels.index(("E", k, k + 1)) for k in range(n - 1))
    frame = WeightFrame(basis, tuple(labels), tuple(weights), to_frame, from_frame, bracket, raising)
    object.__setattr__(basis, "_weight_frame", frame)
    return frame
