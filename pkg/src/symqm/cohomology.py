"""Chevalley-Eilenberg complex of su(N) with trivial coefficients.

Generators ``e_a`` are identified with the left-invariant forms ``theta^a``
dual to ``T_a``.  The differential is the odd derivation fixed by

    d e_a = -1/2 F[b][c][a] e_b ^ e_c,

the dual of the bracket up to the constant ``i`` that keeps it rational.
"""

from __future__ import annotations

import itertools
from collections import defaultdict
from functools import cached_property

from . import exact
from .grassmann import Multivector, create, mask_of, wedge
from .liealg import LieBasis, weight_frame
from .poincare import PoincarePolynomial
from .scalars import GQ, ONE


def _apply_derivation(x: Multivector, images: dict[int, Multivector]) -> Multivector:
    """Odd derivation with ``e_a -> images[a]`` (degree-2 images)."""
    dim = x.dim
    out = Multivector(dim)
    for m, c in x.terms.items():
        pos = 0
        rest = m
        while rest:
            low = rest & -rest
            rest ^= low
            a = low.bit_length() - 1
            img = images.get(a)
            if img:
                term = wedge(img, Multivector._raw(dim, {m ^ low: c if pos % 2 == 0 else -c}))
                out = out + term
            pos += 1
    return out


class CEDifferential:
    """Differential on the exterior algebra over the dual of su(N)."""

    def __init__(self, basis: LieBasis):
        if not basis.exact:
            raise ValueError("the cochain complex needs the exact (rational) basis")
        self.basis = basis
        self.n = basis.n
        self.dim = basis.dim
        F = basis.structure.F
        half = GQ("-1/2")
        images = {}
        for a in range(self.dim):
            terms = defaultdict(lambda: GQ(0))
            for b in range(self.dim):
                for c in range(b + 1, self.dim):
                    # e_b^e_c and e_c^e_b both contribute: -1/2 (F_bca - F_cba) = -F_bca
                    coef = half * (F[b][c][a] - F[c][b][a])
                    if coef:
                        terms[(1 << b) | (1 << c)] += coef
            mv = Multivector(self.dim, dict(terms))
            if mv:
                images[a] = mv
        self.images = images

    def __call__(self, x: Multivector) -> Multivector:
        return _apply_derivation(x, self.images)

    def matrix(self, k: int) -> dict[int, dict[int, GQ]]:
        """Sparse columns ``{source mask: {target mask: coeff}}`` of ``d_k``."""
        if not 0 <= k <= self.dim:
            raise ValueError(f"degree must lie in 0..{self.dim}")
        cols = {}
        for idx in itertools.combinations(range(self.dim), k):
            m = mask_of(idx)
            cols[m] = dict(self(Multivector._raw(self.dim, {m: ONE})).terms)
        return cols

    @cached_property
    def frame(self) -> "_FrameComplex":
        return _FrameComplex(self.basis)


def ce_differential(basis: LieBasis, k: int) -> dict[int, dict[int, GQ]]:
    """The degree-``k`` piece of the differential as sparse columns."""
    return _differential(basis).matrix(k)


def _differential(basis: LieBasis) -> CEDifferential:
    d = basis.__dict__.get("_ce_differential")
    if d is None:
        d = CEDifferential(basis)
        object.__setattr__(basis, "_ce_differential", d)
    return d


class _FrameComplex:
    """The same complex in the Cartan-Weyl frame, split into weight blocks.

    ``d`` commutes with the torus, so it maps each weight block of degree k
    into the block of equal weight in degree k + 1.
    """

    def __init__(self, basis: LieBasis):
        self.frame = fr = weight_frame(basis)
        self.dim = dim = len(fr.labels)
        images = {}
        for al in range(dim):
            terms = defaultdict(lambda: GQ(0))
            for (b, c), row in fr.bracket.items():
                if b >= c:
                    continue
                for target, coef in row:
                    if target == al:
                        # -1/2 (C^al_bc - C^al_cb) = -C^al_bc
                        terms[(1 << b) | (1 << c)] += GQ(-coef)
            mv = Multivector(dim, dict(terms))
            if mv:
                images[al] = mv
        self.images = images
        self._blocks = {}
        self._ranks = {}

    def weight(self, mask: int) -> tuple:
        w = [0] * len(self.frame.weights[0])
        a = 0
        while mask:
            if mask & 1:
                for i, x in enumerate(self.frame.weights[a]):
                    w[i] += x
            mask >>= 1
            a += 1
        return tuple(w)

    def blocks(self, k: int) -> dict[tuple, list[int]]:
        if k not in self._blocks:
            out = defaultdict(list)
            if 0 <= k <= self.dim:
                for idx in itertools.combinations(range(self.dim), k):
                    m = mask_of(idx)
                    out[self.weight(m)].append(m)
            self._blocks[k] = dict(out)
        return self._blocks[k]

    def apply(self, x: Multivector) -> Multivector:
        return _apply_derivation(x, self.images)

    def block_rows(self, k: int, weight: tuple) -> list[dict]:
        """Rows of ``d_k`` restricted to one weight block (columns = block masks)."""
        masks = self.blocks(k).get(weight, [])
        by_target = defaultdict(dict)
        for j, m in enumerate(masks):
            for t, c in self.apply(Multivector._raw(self.dim, {m: ONE})).terms.items():
                assert c.is_real
                by_target[t][j] = c.re
        return list(by_target.values())

    def block_rank(self, k: int, weight: tuple) -> int:
        if not 0 <= k < self.dim:
            return 0
        key = (k, weight)
        if key not in self._ranks:
            self._ranks[key] = exact.rank_rational(self.block_rows(k, weight))
        return self._ranks[key]

    def to_frame(self, x: Multivector) -> Multivector:
        """Rewrite ``theta``-coordinates in the ``omega`` frame."""
        lin = self.frame.to_frame
        out = Multivector(self.dim)
        for m, c in x.terms.items():
            acc = Multivector._raw(self.dim, {0: c})
            idx = []
            a = 0
            mm = m
            while mm:
                if mm & 1:
                    idx.append(a)
                mm >>= 1
                a += 1
            for a in reversed(idx):
                nxt = Multivector(self.dim)
                for al, p in lin[a]:
                    nxt = nxt + create(al, acc).scale(p)
                acc = nxt
            out = out + acc
        return out


def betti_via_cohomology(basis: LieBasis, method: str = "weight") -> PoincarePolynomial:
    """``b_k = dim ker d_k - rank d_{k-1}`` by exact elimination.

    ``weight`` sums the block ranks of the Cartan-Weyl frame; ``direct``
    eliminates the full ``d_k`` of the given basis (practical for N <= 3).
    """
    d = _differential(basis)
    dim = basis.dim
    if method == "weight":
        fc = d.frame
        betti = []
        for k in range(dim + 1):
            total = 0
            for w, masks in fc.blocks(k).items():
                total += len(masks) - fc.block_rank(k, w) - fc.block_rank(k - 1, w)
            betti.append(total)
        return PoincarePolynomial(tuple(betti))
    if method == "direct":
        ranks = []
        sizes = []
        for k in range(dim + 1):
            cols = d.matrix(k)
            sizes.append(len(cols))
            ranks.append(_rank_of_columns(cols))
        betti = [sizes[k] - ranks[k] - (ranks[k - 1] if k else 0) for k in range(dim + 1)]
        return PoincarePolynomial(tuple(betti))
    raise ValueError(f"unknown method {method!r}")


def _rank_of_columns(cols: dict[int, dict[int, GQ]]) -> int:
    # rank of the transpose: every column becomes a row
    rows = []
    for img in cols.values():
        assert all(c.is_real for c in img.values())
        rows.append({t: c.re for t, c in img.items()})
    return exact.rank_rational(rows)


def _homogeneous_degree(x: Multivector) -> int:
    if not x.is_homogeneous():
        raise ValueError("expected a homogeneous multivector")
    return x.degree() if x else 0


def is_cocycle(basis: LieBasis, x: Multivector) -> bool:
    _homogeneous_degree(x)
    return _differential(basis)(x).is_zero()


def is_coboundary(basis: LieBasis, x: Multivector) -> bool:
    """Whether ``x = d y`` for some ``y`` of one degree lower (exact).

    Solved blockwise in the Cartan-Weyl frame: ``d`` preserves weight, so the
    weight-``w`` part of ``x`` must come from the weight-``w`` block.  Real and
    imaginary parts are tested separately since ``d`` is real there.
    """
    k = _homogeneous_degree(x)
    if x.is_zero():
        return True
    if k == 0:
        return False
    fc = _differential(basis).frame
    y = fc.to_frame(x)
    by_weight = defaultdict(dict)
    for m, c in y.terms.items():
        by_weight[fc.weight(m)][m] = c
    for w, part in by_weight.items():
        masks = fc.blocks(k - 1).get(w, [])
        images = [fc.apply(Multivector._raw(fc.dim, {m: ONE})).terms for m in masks]
        rows = [{t: c.re for t, c in img.items()} for img in images]
        for comp in ("re", "im"):
            target = {t: getattr(c, comp) for t, c in part.items() if getattr(c, comp)}
            if target and not exact.in_row_span(rows, target):
                return False
    return True
