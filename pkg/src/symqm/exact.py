"""Exact rank and solve over Q and Q(i).

Rows are sparse ``{column: value}`` maps.  Rational rows are scaled to
primitive integer rows first; rank then runs fraction-free (Bareiss), so
every intermediate entry is an integer minor of the input and all
divisions are exact.
"""

from __future__ import annotations

from math import gcd, lcm
from typing import Iterable, Mapping, Sequence

from gmpy2 import mpq, mpz

from .scalars import GaussianRational

SparseRow = Mapping[int, object]


def integerize(row: SparseRow) -> dict[int, mpz]:
    """Scale a rational row to a primitive integer row with the same span."""
    vals = {c: mpq(v) for c, v in row.items() if v}
    if not vals:
        return {}
    den = 1
    for v in vals.values():
        den = lcm(den, int(v.denominator))
    ints = {c: mpz(v * den) for c, v in vals.items()}
    g = 0
    for v in ints.values():
        g = gcd(g, int(v))
        if g == 1:
            break
    if g > 1:
        ints = {c: v // g for c, v in ints.items()}
    return ints


def bareiss_rank(rows: Iterable[SparseRow]) -> int:
    """Rank of a sparse integer matrix by fraction-free elimination.

    Columns are eliminated in increasing order; the pivot in each column is
    the row whose entry there has the smallest absolute value (ties go to
    the sparser row).
    """
    active = [dict((c, mpz(v)) for c, v in r.items() if v) for r in rows]
    active = [r for r in active if r]
    if not active:
        return 0
    cols = sorted({c for r in active for c in r})
    prev = mpz(1)
    rank = 0
    for col in cols:
        best = None
        for idx, r in enumerate(active):
            v = r.get(col)
            if v is None:
                continue
            key = (abs(v), len(r))
            if best is None or key < best[0]:
                best = (key, idx)
        if best is None:
            continue
        prow = active.pop(best[1])
        piv = prow[col]
        rank += 1
        if not active:
            break
        nxt = []
        for r in active:
            f = r.pop(col, None)
            if f is None:
                if piv == prev:
                    new = r
                else:
                    new = {c: v * piv // prev for c, v in r.items()}
            else:
                new = {c: v * piv for c, v in r.items()}
                for c, pv in prow.items():
                    if c == col:
                        continue
                    w = new.get(c, 0) - f * pv
                    if w:
                        new[c] = w
                    else:
                        new.pop(c, None)
                if prev != 1:
                    new = {c: v // prev for c, v in new.items()}
            if new:
                nxt.append(new)
        active = nxt
        prev = piv
    return rank


def rank_rational(rows: Iterable[SparseRow]) -> int:
    return bareiss_rank(integerize(r) for r in rows)


def realify(rows: Iterable[Mapping[int, GaussianRational]], ncols: int) -> list[dict[int, mpq]]:
    """Real rows [[A, -B], [B, A]] of a Gaussian matrix A + iB (rank doubles)."""
    out = []
    for row in rows:
        top, bot = {}, {}
        for c, z in row.items():
            z = GaussianRational.coerce(z)
            if z.re:
                top[c] = z.re
                bot[c + ncols] = z.re
            if z.im:
                top[c + ncols] = -z.im
                bot[c] = z.im
        out.append(top)
        out.append(bot)
    return out


def rank_gaussian(rows: Sequence[Mapping[int, GaussianRational]], ncols: int) -> int:
    """Rank over Q(i), via the realified matrix."""
    r = rank_rational(realify(rows, ncols))
    assert r % 2 == 0
    return r // 2


def in_row_span(rows: Sequence[SparseRow], target: SparseRow) -> bool:
    """Whether ``target`` is a rational combination of ``rows``."""
    if not any(target.values()):
        return True
    base = rank_rational(rows)
    return rank_rational(list(rows) + [target]) == base


def solve_exact(columns: Sequence[SparseRow], target: SparseRow) -> list[GaussianRational] | None:
    """Solve ``sum_j x_j * columns[j] == target`` over Q(i); ``None`` if infeasible.

    Meant for few unknowns and many equations.  Free variables are set to 0.
    """
    co = GaussianRational.coerce
    keys = sorted({k for col in columns for k in col} | set(target))
    m = len(columns)
    aug = []
    for k in keys:
        row = [co(col.get(k, 0)) for col in columns] + [co(target.get(k, 0))]
        if any(row):
            aug.append(row)
    pivots = []
    r = 0
    for c in range(m):
        p = next((i for i in range(r, len(aug)) if aug[i][c]), None)
        if p is None:
            continue
        aug[r], aug[p] = aug[p], aug[r]
        pv = aug[r][c]
        aug[r] = [v / pv for v in aug[r]]
        for i in range(len(aug)):
            if i != r and aug[i][c]:
                f = aug[i][c]
                aug[i] = [a - f * b for a, b in zip(aug[i], aug[r])]
        pivots.append(c)
        r += 1
    for i in range(r, len(aug)):
        if aug[i][m]:
            return None
    x = [co(0)] * m
    for i, c in enumerate(pivots):
        x[c] = aug[i][m]
    return x
