"""Exact Gaussian-rational scalars.

Values are ``re + im*i`` with ``re`` and ``im`` held as ``gmpy2.mpq``.  The
canonical text form is ``p/q`` for real values and ``re+im*i`` otherwise
(``0+3/4*i``, ``1/2-1*i``); :func:`parse_gq` inverts :func:`format_gq`.
"""

from __future__ import annotations

import re as _re
from fractions import Fraction

from gmpy2 import mpq

Q = mpq
_ZERO = mpq(0)
_ONE = mpq(1)


def as_q(value) -> mpq:
    """Coerce an int, Fraction, mpq or rational string to ``mpq``."""
    if isinstance(value, Fraction):
        return mpq(value.numerator, value.denominator)
    if isinstance(value, float):
        raise TypeError("floats are not exact; pass a Fraction or a string")
    return mpq(value)


class GaussianRational:
    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = as_q(re)
        self.im = as_q(im)

    @classmethod
    def _raw(cls, re: mpq, im: mpq) -> "GaussianRational":
        obj = object.__new__(cls)
        obj.re = re
        obj.im = im
        return obj

    @classmethod
    def coerce(cls, value) -> "GaussianRational":
        if isinstance(value, GaussianRational):
            return value
        if isinstance(value, complex):
            raise TypeError("complex floats are not exact")
        return cls._raw(as_q(value), _ZERO)

    # arithmetic -----------------------------------------------------------
    def __add__(self, other):
        if not isinstance(other, GaussianRational):
            try:
                other = GaussianRational.coerce(other)
            except TypeError:
                return NotImplemented
        return GaussianRational._raw(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, GaussianRational):
            try:
                other = GaussianRational.coerce(other)
            except TypeError:
                return NotImplemented
        return GaussianRational._raw(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        return GaussianRational.coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, GaussianRational):
            try:
                other = GaussianRational.coerce(other)
            except TypeError:
                return NotImplemented
        a, b, c, d = self.re, self.im, other.re, other.im
        if not b:
            if not d:
                return GaussianRational._raw(a * c, _ZERO)
            return GaussianRational._raw(a * c, a * d)
        if not d:
            return GaussianRational._raw(a * c, b * c)
        return GaussianRational._raw(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = GaussianRational.coerce(other)
        norm = other.re * other.re + other.im * other.im
        if not norm:
            raise ZeroDivisionError("division by zero Gaussian rational")
        return self * GaussianRational._raw(other.re / norm, -other.im / norm)

    def __rtruediv__(self, other):
        return GaussianRational.coerce(other) / self

    def __neg__(self):
        return GaussianRational._raw(-self.re, -self.im)

    def __pos__(self):
        return self

    def conjugate(self) -> "GaussianRational":
        return GaussianRational._raw(self.re, -self.im)

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        if isinstance(other, GaussianRational):
            return self.re == other.re and self.im == other.im
        if isinstance(other, complex):
            return False
        try:
            other = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    @property
    def is_real(self) -> bool:
        return not self.im

    def __repr__(self):
        return f"GaussianRational({format_gq(self)!r})"

    def __str__(self):
        return format_gq(self)


GQ = GaussianRational
ZERO = GaussianRational._raw(_ZERO, _ZERO)
ONE = GaussianRational._raw(_ONE, _ZERO)
I = GaussianRational._raw(_ZERO, _ONE)


def format_q(x: mpq) -> str:
    x = mpq(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def format_gq(z) -> str:
    z = GaussianRational.coerce(z)
    if not z.im:
        return format_q(z.re)
    sign = "-" if z.im < 0 else "+"
    return f"{format_q(z.re)}{sign}{format_q(abs(z.im))}*i"


_GQ_RE = _re.compile(r"^(-?\d+(?:/\d+)?)(?:([+-])(\d+(?:/\d+)?)\*i)?$")


def parse_gq(text: str) -> GaussianRational:
    m = _GQ_RE.match(text.strip())
    if m is None:
        raise ValueError(f"not a canonical Gaussian rational: {text!r}")
    re_part = mpq(m.group(1))
    if m.group(2) is None:
        return GaussianRational._raw(re_part, _ZERO)
    im_part = mpq(m.group(3))
    if m.group(2) == "-":
        im_part = -im_part
    return GaussianRational._raw(re_part, im_part)
