from __future__ import annotations

from dataclasses import dataclass
from math import comb


@dataclass(frozen=True)
class PoincarePolynomial:
    """Integer coefficient vector ``(b_0, ..., b_top)`` of ``sum b_k t^k``."""

    coefficients: tuple[int, ...]

    def __post_init__(self):
        coeffs = tuple(int(c) for c in self.coefficients)
        object.__setattr__(self, "coefficients", coeffs)

    @classmethod
    def from_list(cls, coeffs, length: int | None = None) -> "PoincarePolynomial":
        coeffs = [int(c) for c in coeffs]
        if length is not None:
            if any(coeffs[length:]):
                raise ValueError("nonzero coefficient beyond requested length")
            coeffs = coeffs[:length] + [0] * (length - len(coeffs))
        return cls(tuple(coeffs))

    @classmethod
    def product_of_binomials(cls, degrees, length: int | None = None) -> "PoincarePolynomial":
        """Expand ``prod (1 + t^d)``."""
        poly = [1]
        for d in degrees:
            nxt = poly + [0] * d
            for i, c in enumerate(poly):
                nxt[i + d] += c
            poly = nxt
        return cls.from_list(poly, length)

    def __getitem__(self, k):
        return self.coefficients[k]

    def __len__(self):
        return len(self.coefficients)

    def __iter__(self):
        return iter(self.coefficients)

    @property
    def top_degree(self) -> int:
        nz = [k for k, c in enumerate(self.coefficients) if c]
        return nz[-1] if nz else -1

    def support(self) -> list[int]:
        return [k for k, c in enumerate(self.coefficients) if c]

    def evaluate(self, t):
        return sum(c * t**k for k, c in enumerate(self.coefficients))

    def is_palindromic(self) -> bool:
        c = self.coefficients
        return c == c[::-1]

    def substitute_minus_t(self) -> "PoincarePolynomial":
        return PoincarePolynomial(tuple(c if k % 2 == 0 else -c for k, c in enumerate(self.coefficients)))

    def __str__(self):
        parts = []
        for k, c in enumerate(self.coefficients):
            if not c:
                continue
            mono = "" if k == 0 else ("t" if k == 1 else f"t^{k}")
            if k == 0:
                s = str(abs(c))
            elif abs(c) == 1:
                s = mono
            else:
                s = f"{abs(c)}*{mono}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, s))
        if not parts:
            return "0"
        head = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        return head + "".join(f" {sg} {s}" for sg, s in parts[1:])


def su_primitive_degrees(n: int) -> list[int]:
    return list(range(3, 2 * n, 2))


def su_factored(n: int, sign: str = "+") -> str:
    return "".join(f"(1{sign}t^{d})" for d in su_primitive_degrees(n))


def binomial_row(m: int) -> list[int]:
    return [comb(m, k) for k in range(m + 1)]
