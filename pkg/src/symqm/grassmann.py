"""Sparse exterior algebra with exact Gaussian-rational coefficients.

A basis monomial ``e_{a1} ^ ... ^ e_{ak}`` with ``a1 < ... < ak`` is stored as
the bitmask ``sum 2**a``.  Generators are 0-based.  ``create(a, .)`` is left
multiplication by ``e_a`` and ``annihilate(a, .)`` the interior product, so
that ``{annihilate(a), create(b)} = delta_ab``.
"""

from __future__ import annotations

import re
from typing import Iterable, Mapping

from .scalars import GQ, ONE, format_gq, parse_gq


def popcount(mask: int) -> int:
    return mask.bit_count()


def indices_of(mask: int) -> list[int]:
    out = []
    a = 0
    while mask:
        if mask & 1:
            out.append(a)
        mask >>= 1
        a += 1
    return out


def mask_of(indices: Iterable[int]) -> int:
    m = 0
    for a in indices:
        m |= 1 << a
    return m


def wedge_sign(a: int, b: int) -> int:
    """Sign of ``e_A ^ e_B`` relative to the sorted monomial (A, B disjoint)."""
    s = 0
    while b:
        low = b & -b
        s += (a & ~((low << 1) - 1)).bit_count()
        b ^= low
    return -1 if s & 1 else 1


class Multivector:
    """Element of the exterior algebra over a ``dim``-dimensional space."""

    __slots__ = ("dim", "terms")

    def __init__(self, dim: int, terms: Mapping[int, object] | None = None):
        self.dim = dim
        clean = {}
        if terms:
            top = 1 << dim
            for m, c in terms.items():
                if not 0 <= m < top:
                    raise ValueError(f"mask {m:#x} does not fit in {dim} generators")
                c = GQ.coerce(c)
                if c:
                    clean[m] = c
        self.terms = clean

    @classmethod
    def _raw(cls, dim: int, terms: dict) -> "Multivector":
        obj = object.__new__(cls)
        obj.dim = dim
        obj.terms = terms
        return obj

    @classmethod
    def scalar(cls, dim: int, value=1) -> "Multivector":
        return cls(dim, {0: value})

    @classmethod
    def generator(cls, dim: int, a: int) -> "Multivector":
        if not 0 <= a < dim:
            raise IndexError(f"generator {a} out of range (dim {dim})")
        return cls._raw(dim, {1 << a: ONE})

    @classmethod
    def monomial(cls, dim: int, indices: Iterable[int], coeff=1) -> "Multivector":
        """Wedge of generators in the given order, times ``coeff``."""
        out = cls.scalar(dim, coeff)
        for a in reversed(list(indices)):
            out = create(a, out)
        return out

    # structure ------------------------------------------------------------
    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def degrees(self) -> set[int]:
        return {m.bit_count() for m in self.terms}

    def degree(self) -> int:
        """Degree of a homogeneous element (raises for mixed or zero)."""
        ds = self.degrees()
        if len(ds) != 1:
            raise ValueError(f"not homogeneous: degrees {sorted(ds)}")
        return ds.pop()

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def part(self, k: int) -> "Multivector":
        return Multivector._raw(self.dim, {m: c for m, c in self.terms.items() if m.bit_count() == k})

    def coefficient(self, mask: int) -> GQ:
        return self.terms.get(mask, GQ(0))

    def leading(self) -> tuple[int, GQ]:
        """Term with the smallest bitmask (reproducible representative)."""
        m = min(self.terms)
        return m, self.terms[m]

    # linear structure -----------------------------------------------------
    def _check(self, other):
        if not isinstance(other, Multivector):
            raise TypeError("expected a Multivector")
        if other.dim != self.dim:
            raise ValueError(f"dimension mismatch: {self.dim} vs {other.dim}")

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            v = out.get(m)
            v = c if v is None else v + c
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return Multivector._raw(self.dim, out)

    def __neg__(self):
        return Multivector._raw(self.dim, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, k) -> "Multivector":
        k = GQ.coerce(k)
        if not k:
            return Multivector._raw(self.dim, {})
        return Multivector._raw(self.dim, {m: c * k for m, c in self.terms.items()})

    def __mul__(self, k):
        if isinstance(k, Multivector):
            return NotImplemented
        return self.scale(k)

    __rmul__ = __mul__

    def __xor__(self, other):
        return wedge(self, other)

    def __eq__(self, other):
        if not isinstance(other, Multivector):
            return NotImplemented
        return self.dim == other.dim and self.terms == other.terms

    def __hash__(self):
        return hash((self.dim, frozenset(self.terms.items())))

    def __len__(self):
        return len(self.terms)

    def __repr__(self):
        return f"Multivector(dim={self.dim}, {render(self)})"


def wedge(x: Multivector, y: Multivector) -> Multivector:
    x._check(y)
    out: dict[int, GQ] = {}
    ys = list(y.terms.items())
    for mx, cx in x.terms.items():
        for my, cy in ys:
            if mx & my:
                continue
            c = cx * cy
            if wedge_sign(mx, my) < 0:
                c = -c
            m = mx | my
            v = out.get(m)
            if v is None:
                out[m] = c
            else:
                v = v + c
                if v:
                    out[m] = v
                else:
                    del out[m]
    return Multivector._raw(x.dim, out)


def create(a: int, x: Multivector) -> Multivector:
    """``e_a ^ x`` (fermion creation)."""
    if not 0 <= a < x.dim:
        raise IndexError(f"generator {a} out of range (dim {x.dim})")
    bit = 1 << a
    below = bit - 1
    out = {}
    for m, c in x.terms.items():
        if m & bit:
            continue
        out[m | bit] = -c if (m & below).bit_count() & 1 else c
    return Multivector._raw(x.dim, out)


def annihilate(a: int, x: Multivector) -> Multivector:
    """Interior product with the dual of ``e_a`` (odd derivation, degree -1)."""
    if not 0 <= a < x.dim:
        raise IndexError(f"generator {a} out of range (dim {x.dim})")
    bit = 1 << a
    below = bit - 1
    out = {}
    for m, c in x.terms.items():
        if not m & bit:
            continue
        out[m ^ bit] = -c if (m & below).bit_count() & 1 else c
    return Multivector._raw(x.dim, out)


def bilinear_derivation(x: Multivector, table: Mapping[int, Iterable[tuple[int, object]]]) -> Multivector:
    """Even derivation ``sum_{b,c} K[b][c] create(c, annihilate(b, x))``.

    ``table[b]`` lists ``(c, K[b][c])``; each generator ``e_b`` is sent to
    ``sum_c K[b][c] e_c`` and the map is extended by the Leibniz rule.
    """
    out: dict[int, GQ] = {}
    for m, coeff in x.terms.items():
        rest = m
        while rest:
            low = rest & -rest
            rest ^= low
            b = low.bit_length() - 1
            row = table.get(b)
            if not row:
                continue
            base = m ^ low
            sb = (m & (low - 1)).bit_count()
            for c, k in row:
                cbit = 1 << c
                if base & cbit:
                    continue
                sc = (base & (cbit - 1)).bit_count()
                v = coeff * k
                if (sb + sc) & 1:
                    v = -v
                key = base | cbit
                old = out.get(key)
                if old is None:
                    out[key] = v
                else:
                    old = old + v
                    if old:
                        out[key] = old
                    else:
                        del out[key]
    return Multivector._raw(x.dim, out)


# -- canonical text form ------------------------------------------------------

def render(x: Multivector) -> str:
    """``coeff*e[a,b,...]`` terms in increasing bitmask order joined by ``' + '``."""
    if not x.terms:
        return "0"
    parts = []
    for m in sorted(x.terms):
        idx = ",".join(str(a) for a in indices_of(m))
        parts.append(f"{format_gq(x.terms[m])}*e[{idx}]")
    return " + ".join(parts)


_TERM_RE = re.compile(r"^(.+)\*e\[([0-9,]*)\]$")


def parse(text: str, dim: int) -> Multivector:
    text = text.strip()
    if text == "0":
        return Multivector(dim)
    terms = {}
    for chunk in text.split(" + "):
        m = _TERM_RE.match(chunk.strip())
        if m is None:
            raise ValueError(f"bad multivector term {chunk!r}")
        idx = [int(s) for s in m.group(2).split(",") if s]
        terms[mask_of(idx)] = parse_gq(m.group(1))
    return Multivector(dim, terms)
