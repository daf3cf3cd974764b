"""Character-theoretic counting of singlets on the maximal torus of SU(N).

Class functions are Laurent polynomials in ``z_1 .. z_{N-1}`` with
``z_N = 1``; the integrand only depends on ratios ``z_i / z_j`` so fixing
``z_N`` loses nothing, and integration over the torus becomes extraction of
the constant term.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

import numpy as np

from .poincare import PoincarePolynomial, binomial_row, su_primitive_degrees

PLUS = "plus"
MINUS = "paper-minus"

# Exponent vectors are packed into one int in base 2**_ZBITS (balanced
# digits); polynomials in t are packed as their value at t = 2**_TBITS.
# Packed keys/values then add and multiply as plain integers.
_ZBITS = 16
_TBITS = 192


def _pack(digits: Sequence[int], bits: int) -> int:
    out = 0
    for d in reversed(digits):
        out = (out << bits) + d
    return out


def _unpack(value: int, bits: int, length: int | None = None) -> tuple[int, ...]:
    base = 1 << bits
    half = base >> 1
    mask = base - 1
    out = []
    while value and (length is None or len(out) < length):
        d = value & mask
        if d >= half:
            d -= base
        out.append(d)
        value = (value - d) >> bits
    if value:
        raise OverflowError("packed value exceeds the digit budget")
    if length is not None:
        out += [0] * (length - len(out))
    return tuple(out)


def _tpoly(coeff) -> tuple[int, ...]:
    if isinstance(coeff, int):
        return (coeff,)
    return tuple(int(c) for c in coeff)


class LaurentPoly:
    """Sparse Laurent polynomial in ``nvars`` torus variables over Z[t]."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Mapping[tuple, object] | None = None):
        self.nvars = nvars
        self.terms: dict[int, int] = {}
        for exps, coeff in (terms or {}).items():
            exps = tuple(exps)
            if len(exps) != nvars:
                raise ValueError("exponent vector length mismatch")
            val = _pack(_tpoly(coeff), _TBITS)
            if val:
                key = _pack(exps, _ZBITS)
                v = self.terms.get(key, 0) + val
                if v:
                    self.terms[key] = v
                else:
                    self.terms.pop(key, None)

    @classmethod
    def _raw(cls, nvars, terms):
        obj = object.__new__(cls)
        obj.nvars = nvars
        obj.terms = terms
        return obj

    @classmethod
    def one(cls, nvars: int) -> "LaurentPoly":
        return cls(nvars, {(0,) * nvars: 1})

    @classmethod
    def monomial(cls, nvars: int, exps: Sequence[int], coeff=1) -> "LaurentPoly":
        return cls(nvars, {tuple(exps): coeff})

    def items(self):
        """``(exponents, t-coefficients)`` pairs, t-coefficients low degree first."""
        for key, val in self.terms.items():
            yield _unpack(key, _ZBITS, self.nvars), _unpack(val, _TBITS)

    def coefficient(self, exps: Sequence[int]) -> tuple[int, ...]:
        return _unpack(self.terms.get(_pack(tuple(exps), _ZBITS), 0), _TBITS)

    def constant_term(self) -> tuple[int, ...]:
        return _unpack(self.terms.get(0, 0), _TBITS)

    def __len__(self):
        return len(self.terms)

    def __eq__(self, other):
        return isinstance(other, LaurentPoly) and self.nvars == other.nvars and self.terms == other.terms

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.terms)
        for k, v in other.terms.items():
            s = out.get(k, 0) + v
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return LaurentPoly._raw(self.nvars, out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._raw(self.nvars, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        if len(other.terms) > len(self.terms):
            self, other = other, self
        out: dict[int, int] = {}
        get = out.get
        small = list(other.terms.items())
        for k1, v1 in self.terms.items():
            for k2, v2 in small:
                k = k1 + k2
                s = get(k, 0) + v1 * v2
                if s:
                    out[k] = s
                else:
                    del out[k]
        return LaurentPoly._raw(self.nvars, out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        out = LaurentPoly.one(self.nvars)
        for _ in range(e):
            out = out * self
        return out

    def _coerce(self, other) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            if other.nvars != self.nvars:
                raise ValueError("variable count mismatch")
            return other
        return LaurentPoly(self.nvars, {(0,) * self.nvars: other})

    def conjugate(self) -> "LaurentPoly":
        """``z -> 1/z`` (complex conjugation on the unit torus, real t)."""
        return LaurentPoly._raw(self.nvars, {-k: v for k, v in self.terms.items()})

    def set_last_to_one(self) -> "LaurentPoly":
        out = LaurentPoly(self.nvars - 1)
        for exps, coeff in self.items():
            out = out + LaurentPoly(self.nvars - 1, {exps[:-1]: coeff})
        return out

    def max_abs_exponent(self) -> int:
        return max((max(map(abs, e), default=0) for e, _ in self.items()), default=0)

    def evaluate(self, z: Sequence[complex], t=None) -> complex:
        """Value at torus point ``z``; ``t`` may be omitted for t-free polynomials."""
        z = np.asarray(z, dtype=complex)
        total = 0j
        for exps, coeff in self.items():
            if t is None:
                if len(coeff) > 1:
                    raise ValueError("polynomial depends on t; pass a value for t")
                c = coeff[0] if coeff else 0
            else:
                c = sum(ci * t**i for i, ci in enumerate(coeff))
            total += c * np.prod(z ** np.asarray(exps))
        return complex(total)

    def __repr__(self):
        return f"LaurentPoly(nvars={self.nvars}, {len(self.terms)} terms)"


def constant_term_of_product(a: LaurentPoly, b: LaurentPoly) -> tuple[int, ...]:
    """``CT(a * b) = sum_m a_m b_{-m}`` without forming the product."""
    if len(a.terms) > len(b.terms):
        a, b = b, a
    total = 0
    for k, v in a.terms.items():
        w = b.terms.get(-k)
        if w:
            total += v * w
    return _unpack(total, _TBITS)


def ratio(n: int, i: int, j: int, coeff=1) -> LaurentPoly:
    """``coeff * z_i / z_j`` in the gauge ``z_N = 1`` (0-based i, j)."""
    exps = [0] * (n - 1)
    if i < n - 1:
        exps[i] += 1
    if j < n - 1:
        exps[j] -= 1
    return LaurentPoly.monomial(n - 1, exps, coeff)


def adjoint_character(n: int) -> LaurentPoly:
    """``sum_{i,j} z_i / z_j - 1`` with ``z_N = 1``."""
    if n < 2:
        raise ValueError("SU(N) needs N >= 2")
    out = LaurentPoly(n - 1, {(0,) * (n - 1): -1})
    for i in range(n):
        for j in range(n):
            out = out + ratio(n, i, j)
    return out


def torus_point(angles: Sequence[float]) -> np.ndarray:
    """SU(N) torus point ``z`` from N - 1 free angles (last angle closes the sum)."""
    angles = np.asarray(angles, dtype=float)
    return np.exp(1j * np.append(angles, -angles.sum()))


def weyl_character_determinant(n: int, labels: Sequence[int], angles: Sequence[float]) -> complex:
    """``det(z_j^{N-i+l_i}) / det(z_j^{N-i})`` at a torus point.

    ``angles`` holds N angles, or N - 1 angles completed to an SU(N) point.
    """
    labels = list(labels)
    if len(labels) != n:
        raise ValueError(f"need {n} weight labels")
    shifted = [n - 1 - i + labels[i] for i in range(n)]
    if len(set(shifted)) != n:
        raise ValueError("weight labels give coinciding exponents")
    angles = np.asarray(angles, dtype=float)
    z = torus_point(angles) if len(angles) == n - 1 else np.exp(1j * angles)
    if len(z) != n:
        raise ValueError(f"need {n} or {n - 1} angles")
    for i in range(n):
        for j in range(i + 1, n):
            if abs(z[i] - z[j]) < 1e-12:
                raise ValueError("coinciding torus coordinates: Weyl denominator vanishes")
    num = np.linalg.det(np.array([[zj**e for zj in z] for e in shifted]))
    den = np.linalg.det(np.array([[zj ** (n - 1 - i) for zj in z] for i in range(n)]))
    return complex(num / den)


ADJOINT_LABELS = lambda n: [2] + [1] * (n - 2) + [0]


# -- exterior powers ----------------------------------------------------------

def _exactify(values):
    if all(isinstance(v, (int, Fraction)) for v in values):
        return [Fraction(v) for v in values]
    return list(values)


def exterior_character(chi_powers: Sequence, m: int):
    """Character of the m-th exterior power from ``chi_powers[k-1] = chi(R^k)``.

    Newton recurrence ``m e_m = sum_k (-1)^(k-1) chi(R^k) e_{m-k}``.  Works on
    scalars or numpy arrays; integer input stays exact.
    """
    if m < 0:
        raise ValueError("exterior degree must be non-negative")
    if m == 0:
        return 1
    if len(chi_powers) < m:
        raise ValueError(f"need chi(R^k) for k = 1..{m}")
    p = _exactify(chi_powers[:m])
    e = [1]
    for j in range(1, m + 1):
        acc = 0
        for k in range(1, j + 1):
            term = p[k - 1] * e[j - k]
            acc = acc + (term if k % 2 else -term)
        e.append(acc / j)
    return e[m]


def _partitions(m: int, largest: int | None = None):
    """Multiplicity vectors ``{k: i_k}`` with ``sum k i_k = m``."""
    largest = m if largest is None else largest
    if m == 0:
        yield {}
        return
    for k in range(min(m, largest), 0, -1):
        for rest in _partitions(m - k, k):
            out = dict(rest)
            out[k] = out.get(k, 0) + 1
            yield out


def frobenius_exterior_character(chi_powers: Sequence, m: int, sign: str = "standard"):
    """Partition-sum form of the exterior-power character.

    ``standard`` uses ``(-1)^(sum (k-1) i_k)``; ``alternating`` uses
    ``(-1)^(sum i_k)``, which differs by ``(-1)^m``.
    """
    if m < 0:
        raise ValueError("exterior degree must be non-negative")
    p = _exactify(chi_powers[:m])
    total = 0
    for part in _partitions(m):
        if sign == "standard":
            s = (-1) ** sum((k - 1) * i for k, i in part.items())
        elif sign == "alternating":
            s = (-1) ** sum(part.values())
        else:
            raise ValueError(f"unknown sign convention {sign!r}")
        term = Fraction(s) if not p or isinstance(p[0], Fraction) else s
        for k, i in part.items():
            term = term * p[k - 1] ** i / (Fraction(k) ** i * math.factorial(i))
        total = total + term
    return total


# -- constant-term pipeline ---------------------------------------------------

def vandermonde(n: int) -> LaurentPoly:
    """``prod_{i<j} (z_i - z_j)`` in all N variables."""
    out = LaurentPoly.one(n)
    for i in range(n):
        for j in range(i + 1, n):
            zi = [0] * n
            zj = [0] * n
            zi[i] = 1
            zj[j] = 1
            out = out * (LaurentPoly.monomial(n, zi) - LaurentPoly.monomial(n, zj))
    return out


def root_product(n: int) -> LaurentPoly:
    """``prod_{i != j} (1 - z_i / z_j)`` in all N variables."""
    out = LaurentPoly.one(n)
    for i in range(n):
        for j in range(n):
            if i != j:
                e = [0] * n
                e[i] += 1
                e[j] -= 1
                out = out * (1 - LaurentPoly.monomial(n, e))
    return out


def _sign(convention: str) -> int:
    if convention == PLUS:
        return 1
    if convention == MINUS:
        return -1
    raise ValueError(f"unknown convention {convention!r}")


def poincare_via_ct(n: int, convention: str = PLUS) -> PoincarePolynomial:
    """``(1/N!) (1 + s t)^(N-1) CT[prod_{i != j} (1 - z_i/z_j)(1 + s t z_i/z_j)]``.

    ``s = +1`` gives the Poincare polynomial; ``s = -1`` gives it at ``-t``.
    """
    if n < 2:
        raise ValueError("SU(N) needs N >= 2")
    s = _sign(convention)
    nv = n - 1
    factors = []
    for i in range(n):
        for j in range(n):
            if i != j:
                x = ratio(n, i, j)
                # (1 - x)(1 + s t x) = 1 + (s t - 1) x - s t x^2
                x2 = x * x
                factors.append(1 + x * LaurentPoly(nv, {(0,) * nv: (-1, s)}) + x2 * LaurentPoly(nv, {(0,) * nv: (0, -s)}))
    half = len(factors) // 2
    left = LaurentPoly.one(nv)
    for f in factors[:half]:
        left = left * f
    right = LaurentPoly.one(nv)
    for f in factors[half:]:
        right = right * f
    ct = list(constant_term_of_product(left, right))
    poly = ct
    for _ in range(n - 1):
        poly = [a + s * b for a, b in zip(poly + [0], [0] + poly)]
    fact = math.factorial(n)
    out = []
    for c in poly:
        q, r = divmod(c, fact)
        if r:
            raise ArithmeticError(f"constant term not divisible by {n}!: {poly}")
        out.append(q)
    return PoincarePolynomial.from_list(out, n * n)


def poincare_closed_form(n: int) -> PoincarePolynomial:
    """``(1 + t^3)(1 + t^5) ... (1 + t^(2N-1))``."""
    if n < 2:
        raise ValueError("SU(N) needs N >= 2")
    return PoincarePolynomial.product_of_binomials(su_primitive_degrees(n), n * n)


def unconstrained_poincare(n: int) -> PoincarePolynomial:
    """``(1 + t)^(N^2 - 1)``: counts without the Gauss law."""
    if n < 2:
        raise ValueError("SU(N) needs N >= 2")
    return PoincarePolynomial(tuple(binomial_row(n * n - 1)))


# -- quadrature cross-check ---------------------------------------------------

@dataclass
class QuadratureResult:
    n: int
    grid: int
    values: np.ndarray
    max_deviation: float
    rounded: PoincarePolynomial | None
    exact_grid: bool


def integrand_bandwidth(n: int) -> int:
    """Largest |exponent| of any single torus variable in the Weyl integrand."""
    return 2 * (n - 1)


def _grid_points(n: int, grid: int):
    axes = [2 * np.pi * np.arange(grid) / grid] * (n - 1)
    mesh = np.meshgrid(*axes, indexing="ij")
    z = [np.exp(1j * a.ravel()) for a in mesh]
    z.append(np.ones_like(z[0]))
    return z


def _weyl_density(z) -> np.ndarray:
    n = len(z)
    dens = np.ones_like(z[0])
    for i in range(n):
        for j in range(n):
            if i != j:
                dens = dens * (1 - z[i] / z[j])
    return dens


def measure_normalization(n: int, grid: int) -> float:
    """Trapezoid value of ``(1/N!) int |M|^2`` over the torus (should be 1)."""
    z = _grid_points(n, grid)
    return float(np.mean(_weyl_density(z)).real / math.factorial(n))


def quadrature_check(n: int, grid: int | None = None, convention: str = PLUS) -> QuadratureResult:
    """Per-degree singlet counts by trapezoid sums of ``|M|^2 chi(Lambda^m R)``."""
    s = _sign(convention)
    band = integrand_bandwidth(n)
    if grid is None:
        grid = 1 << (2 * band).bit_length()
    exact_grid = grid > 2 * band
    if not exact_grid:
        warnings.warn(f"grid {grid} does not exceed twice the bandwidth {band}; results are not rounded")
    z = _grid_points(n, grid)
    dim = n * n - 1
    chi = []
    for k in range(1, dim + 1):
        acc = -np.ones_like(z[0])
        for i in range(n):
            for j in range(n):
                acc = acc + (z[i] / z[j]) ** k
        chi.append(acc)
    dens = _weyl_density(z)
    fact = math.factorial(n)
    values = np.array(
        [np.mean(dens * exterior_character(chi, m)).real / fact * s**m for m in range(dim + 1)]
    )
    dev = float(np.max(np.abs(values - np.round(values))))
    rounded = PoincarePolynomial(tuple(int(v) for v in np.round(values))) if exact_grid and dev < 1e-8 else None
    return QuadratureResult(n, grid, values, dev, rounded, exact_grid)
