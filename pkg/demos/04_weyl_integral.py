"""
The torus integral
==================

Singlet counts from characters: exact constant terms and a trapezoid check.
"""

from symqm.weyl import MINUS, poincare_via_ct, quadrature_check

# exact constant-term extraction scales further than the exterior algebra
for n in range(2, 7):
    print(f"SU({n}):", poincare_via_ct(n))

# the same integral on a uniform grid; integrand is band limited so this is exact
for n, grid in ((2, 16), (3, 32)):
    res = quadrature_check(n, grid)
    print(f"SU({n}) grid {grid}:", res.values.round(12).tolist(), "max dev", res.max_deviation)

# with the opposite sign inside the fermionic factor one gets P(-t)
print("minus sign, SU(2):", poincare_via_ct(2, MINUS))
print("minus sign, SU(3):", poincare_via_ct(3, MINUS))
