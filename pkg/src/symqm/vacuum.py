"""Vacuum states of the SU(N) supersymmetric matrix model.

States are finite sums ``sum_m phi^m (x) x_m`` applied to the bosonic vacuum
``|v>`` (``p_a|v> = psi_a|v> = 0``), with ``phi^m`` a monomial and ``x_m`` a
:class:`~symqm.grassmann.Multivector` in the fermion creation operators.

The Grassmann generator ``e_a`` stands for ``psibar_a``, the coefficient of
``T_a`` in ``psibar = psibar_a T_a``; like ``phi_a`` it transforms in the
coadjoint, which is what makes ``Tr(psibar^n)`` and ``Tr(phi^n)`` invariant.
Momenta are contracted with ``M = 2 g^{-1}``, the inverse of the normalised
trace form ``Tr(XY)/2``; for Gell-Mann matrices ``M`` is the identity.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import reduce
from typing import Mapping, Sequence

import numpy as np

from . import exact
from .grassmann import Multivector, annihilate, bilinear_derivation, create, indices_of, mask_of, wedge
from .liealg import LieBasis, trace_product, weight_frame
from .poincare import PoincarePolynomial, su_primitive_degrees
from .scalars import GQ, I, ONE, ZERO

MINUS_I = -I


def _require_exact(basis: LieBasis):
    if not basis.exact:
        raise ValueError("this operation needs the exact (rational) basis")


# -- polynomials in phi -------------------------------------------------------

class Polynomial:
    """Sparse polynomial in ``phi_0 .. phi_{dim-1}`` with Gaussian-rational coefficients."""

    __slots__ = ("dim", "terms")

    def __init__(self, dim: int, terms: Mapping[tuple, object] | None = None):
        self.dim = dim
        self.terms = {}
        for e, c in (terms or {}).items():
            e = tuple(e)
            if len(e) != dim:
                raise ValueError("exponent length mismatch")
            c = GQ.coerce(c)
            if c:
                self.terms[e] = c

    @classmethod
    def constant(cls, dim, value=1):
        return cls(dim, {(0,) * dim: value})

    @classmethod
    def variable(cls, dim, a):
        e = [0] * dim
        e[a] = 1
        return cls(dim, {tuple(e): 1})

    def __add__(self, other):
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e, ZERO) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return _poly(self.dim, out)

    def __neg__(self):
        return _poly(self.dim, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            k = GQ.coerce(other)
            return _poly(self.dim, {e: c * k for e, c in self.terms.items() if c * k})
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                v = out.get(e, ZERO) + c1 * c2
                if v:
                    out[e] = v
                else:
                    out.pop(e, None)
        return _poly(self.dim, out)

    __rmul__ = __mul__

    def diff(self, a: int) -> "Polynomial":
        out = {}
        for e, c in self.terms.items():
            if e[a]:
                ne = list(e)
                ne[a] -= 1
                out[tuple(ne)] = c * e[a]
        return _poly(self.dim, out)

    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return isinstance(other, Polynomial) and self.dim == other.dim and self.terms == other.terms

    def __call__(self, phi) -> complex:
        total = 0j
        for e, c in self.terms.items():
            total += complex(c) * np.prod([float(x) ** k for x, k in zip(phi, e)])
        return total

    def __repr__(self):
        return f"Polynomial({len(self.terms)} terms, degree {self.degree()})"


def _poly(dim, terms):
    p = object.__new__(Polynomial)
    p.dim = dim
    p.terms = terms
    return p


def _phi_matrix_poly(basis: LieBasis):
    n, dim = basis.n, basis.dim
    mat = [[Polynomial(dim) for _ in range(n)] for _ in range(n)]
    for a, t in enumerate(basis.generators):
        for i in range(n):
            for j in range(n):
                if t[i, j]:
                    mat[i][j] = mat[i][j] + Polynomial.variable(dim, a) * t[i, j]
    return mat


def _matmul_poly(x, y):
    n = len(x)
    dim = x[0][0].dim
    out = [[Polynomial(dim) for _ in range(n)] for _ in range(n)]
    for i in range(n):
        for j in range(n):
            acc = Polynomial(dim)
            for k in range(n):
                if x[i][k] and y[k][j]:
                    acc = acc + x[i][k] * y[k][j]
            out[i][j] = acc
    return out


def trace_phi(basis: LieBasis, n: int, left: int | None = None) -> Polynomial:
    """Exact ``Tr(phi^n)``, or ``Tr(T_left phi^n)`` when ``left`` is given."""
    _require_exact(basis)
    phi = _phi_matrix_poly(basis)
    size = basis.n
    if left is None:
        if n < 1:
            raise ValueError("power must be >= 1")
        m = phi
        for _ in range(n - 1):
            m = _matmul_poly(m, phi)
    else:
        t = basis.generators[left]
        m = [[Polynomial.constant(basis.dim, t[i, j]) for j in range(size)] for i in range(size)]
        for _ in range(n):
            m = _matmul_poly(m, phi)
    acc = Polynomial(basis.dim)
    for i in range(size):
        acc = acc + m[i][i]
    return acc


# -- states ---------------------------------------------------------------

class PolyGrassState:
    """``sum phi^m (x) x_m`` applied to ``|v>``."""

    __slots__ = ("basis", "terms")

    def __init__(self, basis: LieBasis, terms: Mapping[tuple, Multivector] | None = None):
        self.basis = basis
        self.terms = {}
        for e, mv in (terms or {}).items():
            if mv.dim != basis.dim:
                raise ValueError("multivector dimension does not match the basis")
            if mv:
                self.terms[tuple(e)] = mv

    @classmethod
    def product(cls, basis: LieBasis, poly: Polynomial | None = None, mv: Multivector | None = None):
        """``poly (x) mv``; either factor defaults to 1."""
        dim = basis.dim
        poly = poly if poly is not None else Polynomial.constant(dim)
        mv = mv if mv is not None else Multivector.scalar(dim)
        return cls(basis, {e: mv.scale(c) for e, c in poly.terms.items()})

    @classmethod
    def vacuum(cls, basis):
        return cls.product(basis)

    def _add_into(self, out, e, mv):
        old = out.get(e)
        new = mv if old is None else old + mv
        if new:
            out[e] = new
        else:
            out.pop(e, None)

    def __add__(self, other):
        out = dict(self.terms)
        for e, mv in other.terms.items():
            self._add_into(out, e, mv)
        return _state(self.basis, out)

    def __neg__(self):
        return _state(self.basis, {e: -mv for e, mv in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, k):
        return _state(self.basis, {e: mv.scale(k) for e, mv in self.terms.items() if mv.scale(k)})

    __mul__ = scale
    __rmul__ = scale

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return isinstance(other, PolyGrassState) and self.basis is other.basis and self.terms == other.terms

    def __repr__(self):
        return f"PolyGrassState({len(self.terms)} monomials)"

    def map_fermions(self, f) -> "PolyGrassState":
        out = {}
        for e, mv in self.terms.items():
            y = f(mv)
            if y:
                out[e] = y
        return _state(self.basis, out)

    def derivative(self, a: int) -> "PolyGrassState":
        out: dict = {}
        for e, mv in self.terms.items():
            if e[a]:
                ne = list(e)
                ne[a] -= 1
                self._add_into(out, tuple(ne), mv.scale(e[a]))
        return _state(self.basis, out)

    def times_variable(self, c: int) -> "PolyGrassState":
        out = {}
        for e, mv in self.terms.items():
            ne = list(e)
            ne[c] += 1
            out[tuple(ne)] = mv
        return _state(self.basis, out)


def _state(basis, terms):
    s = object.__new__(PolyGrassState)
    s.basis = basis
    s.terms = terms
    return s


def _momentum_metric(basis: LieBasis) -> list[list]:
    """``M = 2 g^{-1}``; identity for the orthonormal normalisation."""
    ginv = basis.structure.ginv
    return [[2 * v for v in row] for row in ginv]


def apply_qbar(state: PolyGrassState) -> PolyGrassState:
    """``Qbar = psibar_a p_a`` with ``p_a = -i d/dphi_a``."""
    basis = state.basis
    out = PolyGrassState(basis)
    for a in range(basis.dim):
        d = state.derivative(a)
        if d:
            out = out + d.map_fermions(lambda x, a=a: create(a, x)).scale(MINUS_I)
    return out


def apply_q(state: PolyGrassState) -> PolyGrassState:
    """``Q = M_ab psi_a p_b``."""
    basis = state.basis
    metric = _momentum_metric(basis)
    out = PolyGrassState(basis)
    for b in range(basis.dim):
        d = state.derivative(b)
        if not d:
            continue
        for a in range(basis.dim):
            if metric[a][b]:
                term = d.map_fermions(lambda x, a=a: annihilate(a, x))
                out = out + term.scale(MINUS_I * metric[a][b])
    return out


def apply_hamiltonian(state: PolyGrassState) -> PolyGrassState:
    """``H = 1/2 M_ab p_a p_b = -1/2 M_ab d_a d_b``."""
    basis = state.basis
    metric = _momentum_metric(basis)
    out = PolyGrassState(basis)
    half = GQ("-1/2")
    for a in range(basis.dim):
        da = state.derivative(a)
        if not da:
            continue
        for b in range(basis.dim):
            if metric[a][b]:
                out = out + da.derivative(b).scale(half * metric[a][b])
    return out


# -- Gauss law ----------------------------------------------------------------

def _gauss_tables(basis: LieBasis, drop_i: bool = False):
    """Per generator ``a``: ``{b: [(c, K_a[b][c])]}`` with ``K_a[b][c] = -i F[a][c][b]``."""
    key = "_gauss_tables_real" if drop_i else "_gauss_tables"
    cached = basis.__dict__.get(key)
    if cached is not None:
        return cached
    F = basis.structure.F
    dim = basis.dim
    tables = []
    for a in range(dim):
        tab = {}
        for b in range(dim):
            row = []
            for c in range(dim):
                f = F[a][c][b]
                if f:
                    row.append((c, GQ(-f) if drop_i else MINUS_I * f))
            if row:
                tab[b] = row
        tables.append(tab)
    object.__setattr__(basis, key, tables)
    return tables


def gauss_action(basis: LieBasis, a: int, x: Multivector) -> Multivector:
    """Fermionic part of ``G_a``: the coadjoint action of ``T_a`` as a derivation."""
    _require_exact(basis)
    if not 0 <= a < basis.dim:
        raise IndexError(f"generator index {a} out of range")
    return bilinear_derivation(x, _gauss_tables(basis)[a])


def apply_gauss_full(a: int, state: PolyGrassState) -> PolyGrassState:
    """Bosonic rotation ``K_a[b][c] phi_c d_b`` plus :func:`gauss_action`."""
    basis = state.basis
    table = _gauss_tables(basis)[a]
    out = state.map_fermions(lambda x: gauss_action(basis, a, x))
    for b, row in table.items():
        d = state.derivative(b)
        if not d:
            continue
        for c, k in row:
            out = out + d.times_variable(c).scale(k)
    return out


# -- trace operators ----------------------------------------------------------

def _psi_matrix(basis: LieBasis):
    n = basis.n
    ent = [[[] for _ in range(n)] for _ in range(n)]
    for a, t in enumerate(basis.generators):
        for i in range(n):
            for j in range(n):
                if t[i, j]:
                    ent[i][j].append((a, t[i, j]))
    return ent


def _wedge_linear_right(x: Multivector, lin) -> Multivector:
    """``x ^ (sum_a c_a e_a)`` for homogeneous ``x``."""
    dim = x.dim
    out: dict = {}
    for a, c in lin:
        bit = 1 << a
        above = ~((bit << 1) - 1)
        for m, v in x.terms.items():
            if m & bit:
                continue
            w = v * c
            if (m & above).bit_count() & 1:
                w = -w
            key = m | bit
            old = out.get(key)
            if old is None:
                out[key] = w
            else:
                old = old + w
                if old:
                    out[key] = old
                else:
                    del out[key]
    return Multivector._raw(dim, out)


def _psi_powers(basis: LieBasis, n: int):
    cache = basis.__dict__.get("_psi_powers")
    if cache is None:
        dim = basis.dim
        lin = _psi_matrix(basis)
        first = [[Multivector(dim, {1 << a: c for a, c in lin[i][j]}) for j in range(basis.n)] for i in range(basis.n)]
        cache = [None, first]
        object.__setattr__(basis, "_psi_powers", cache)
    lin = _psi_matrix(basis)
    size = basis.n
    while len(cache) <= n:
        prev = cache[-1]
        nxt = [[None] * size for _ in range(size)]
        for i in range(size):
            for j in range(size):
                acc = Multivector(basis.dim)
                for k in range(size):
                    if lin[k][j] and prev[i][k]:
                        acc = acc + _wedge_linear_right(prev[i][k], lin[k][j])
                nxt[i][j] = acc
        cache.append(nxt)
    return cache[n]


def trace_psi(basis: LieBasis, n: int) -> Multivector:
    """``Tr(psibar^n) = Tr(T_{a1}..T_{an}) e_{a1} ^ .. ^ e_{an}`` by matrix powers.

    Powers beyond ``dim`` are zero: there are no such forms.
    """
    _require_exact(basis)
    if n < 1:
        raise ValueError("trace power must be >= 1")
    if n > basis.dim:
        return Multivector(basis.dim)
    store = basis.__dict__.setdefault("_trace_psi_store", {})
    if n in store:
        return store[n]
    power = _psi_powers(basis, n)
    acc = Multivector(basis.dim)
    for i in range(basis.n):
        acc = acc + power[i][i]
    store[n] = acc
    return acc


def trace_psi_naive(basis: LieBasis, n: int) -> Multivector:
    """Index-sum definition; exponential in ``n``, kept as an oracle."""
    _require_exact(basis)
    dim = basis.dim
    out = Multivector(dim)
    for idx in itertools.combinations(range(dim), n):
        coeff = ZERO
        for perm in itertools.permutations(range(n)):
            sign = _perm_sign(perm)
            coeff = coeff + trace_product(basis, [idx[p] for p in perm]) * sign
        if coeff:
            out = out + Multivector(dim, {mask_of(idx): coeff})
    return out


def _perm_sign(perm) -> int:
    sign = 1
    seen = list(perm)
    for i in range(len(seen)):
        while seen[i] != i:
            j = seen[i]
            seen[i], seen[j] = seen[j], seen[i]
            sign = -sign
    return sign


# -- singlet counting ---------------------------------------------------------

def _subsets_of_weight_zero(weights: Sequence[tuple], k: int) -> list[int]:
    dim = len(weights)
    zero = tuple(0 for _ in weights[0])
    out = []
    for idx in itertools.combinations(range(dim), k):
        tot = reduce(lambda u, v: tuple(x + y for x, y in zip(u, v)), (weights[a] for a in idx), zero)
        if tot == zero:
            out.append(mask_of(idx))
    return out


def _frame_coadjoint_tables(frame):
    """``ad*(W_beta)`` on frame generators: ``omega^alpha -> -sum_gamma C^alpha_{beta gamma} omega^gamma``."""
    dim = len(frame.labels)
    tables = [dict() for _ in range(dim)]
    for (b, c), row in frame.bracket.items():
        for al, coef in row:
            tables[b].setdefault(al, []).append((c, GQ(-coef)))
    return tables


def _images_as_rows(masks: Sequence[int], dim: int, maps) -> list[dict]:
    """Stacked matrix rows (one per target mask per map) over columns ``masks``."""
    rows = []
    for tab in maps:
        by_target: dict = {}
        for j, m in enumerate(masks):
            img = bilinear_derivation(Multivector._raw(dim, {m: ONE}), tab)
            for tm, c in img.terms.items():
                by_target.setdefault(tm, {})[j] = c
        for r in by_target.values():
            assert all(c.is_real for c in r.values())
            rows.append({j: c.re for j, c in r.items()})
    return rows


def singlet_dimension(basis: LieBasis, k: int, method: str = "weight") -> int:
    """Dimension of the Gauss-law invariant subspace of degree ``k``.

    ``weight``: restrict to coadjoint weight zero in the Cartan-Weyl frame
    and stack the simple raising operators.  ``stacked``: stack all
    ``dim`` generator actions on the full degree-``k`` space of the given
    basis.  Both ranks are exact.
    """
    _require_exact(basis)
    dim = basis.dim
    if not 0 <= k <= dim:
        raise ValueError(f"degree must lie in 0..{dim}")
    if method == "weight":
        frame = weight_frame(basis)
        masks = _subsets_of_weight_zero(frame.weights, k)
        if not masks:
            return 0
        tables = _frame_coadjoint_tables(frame)
        rows = _images_as_rows(masks, dim, [tables[b] for b in frame.raising])
        return len(masks) - exact.rank_rational(rows)
    if method == "stacked":
        masks = [mask_of(idx) for idx in itertools.combinations(range(dim), k)]
        rows = _images_as_rows(masks, dim, _gauss_tables(basis, drop_i=True))
        return len(masks) - exact.rank_rational(rows)
    raise ValueError(f"unknown method {method!r}")


def singlet_dimension_float(basis: LieBasis, k: int, tol: float = 1e-8) -> int:
    """Floating-point count from the real structure constants and an SVD rank."""
    dim = basis.dim
    F = np.array(basis.structure.F, dtype=float)
    masks = [mask_of(idx) for idx in itertools.combinations(range(dim), k)]
    if not masks:
        return 0
    col = {m: j for j, m in enumerate(masks)}
    blocks = []
    for a in range(dim):
        mat = np.zeros((len(masks), len(masks)))
        for j, m in enumerate(masks):
            for b in indices_of(m):
                base = m ^ (1 << b)
                sb = (m & ((1 << b) - 1)).bit_count()
                for c in range(dim):
                    f = -F[a, c, b]
                    if abs(f) < 1e-15 or base >> c & 1:
                        continue
                    sc = (base & ((1 << c) - 1)).bit_count()
                    mat[col[base | 1 << c], j] += -f if (sb + sc) & 1 else f
        blocks.append(mat)
    stacked = np.vstack(blocks)
    if k == 0 or not stacked.any():
        return len(masks)
    s = np.linalg.svd(stacked, compute_uv=False)
    return len(masks) - int(np.sum(s > tol))


def betti_via_singlets(basis: LieBasis, method: str = "weight") -> PoincarePolynomial:
    return PoincarePolynomial(tuple(singlet_dimension(basis, k, method) for k in range(basis.dim + 1)))


# -- vacuum basis -------------------------------------------------------------

def primitive_label(degrees: Sequence[int]) -> str:
    if not degrees:
        return "1"
    return "∧".join(f"Tr(ψ̄^{d})" for d in degrees)


def vacuum_states(basis: LieBasis, k: int, verify: bool = True) -> list[tuple[str, Multivector]]:
    """Products of distinct primitive traces ``Tr(psibar^{2m+1})``, m < N, of degree ``k``."""
    _require_exact(basis)
    dim = basis.dim
    if not 0 <= k <= dim:
        raise ValueError(f"degree must lie in 0..{dim}")
    prims = su_primitive_degrees(basis.n)
    out = []
    for r in range(len(prims) + 1):
        for combo in itertools.combinations(prims, r):
            if sum(combo) != k:
                continue
            mv = Multivector.scalar(dim)
            for d in combo:
                mv = wedge(mv, trace_psi(basis, d))
            out.append((primitive_label(combo), mv))
    if verify:
        rows = [dict(mv.terms) for _, mv in out]
        cols = {m: j for j, m in enumerate(sorted({m for r in rows for m in r}))}
        rank = exact.rank_gaussian([{cols[m]: c for m, c in r.items()} for r in rows], len(cols)) if rows else 0
        expected = singlet_dimension(basis, k)
        if rank != len(out) or rank != expected:
            raise ArithmeticError(
                f"vacuum basis at degree {k}: {len(out)} products of rank {rank}, singlet dimension {expected}"
            )
    return out


def vacuum_basis(basis: LieBasis, k: int, verify: bool = True) -> list[Multivector]:
    return [mv for _, mv in vacuum_states(basis, k, verify)]


@dataclass
class CayleyHamiltonReport:
    n: int
    degree: int
    products: list[str]
    coefficients: list | None
    vanishes: bool

    @property
    def feasible(self) -> bool:
        return self.coefficients is not None


def verify_cayley_hamilton(basis: LieBasis, n: int) -> CayleyHamiltonReport:
    """Express ``Tr(psibar^{2n+1})``, ``n >= N``, through products of primitive traces."""
    _require_exact(basis)
    deg = 2 * n + 1
    if n < basis.n or deg > basis.dim:
        raise ValueError(f"need N <= n and 2n+1 <= {basis.dim}")
    target = trace_psi(basis, deg)
    prods = vacuum_states(basis, deg, verify=False)
    coeffs = exact.solve_exact([dict(mv.terms) for _, mv in prods], dict(target.terms))
    return CayleyHamiltonReport(n, deg, [lab for lab, _ in prods], coeffs, target.is_zero())
