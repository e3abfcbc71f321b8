"""
Finite fields and polynomials
=============================

Elements are plain integers.  In GF(p^m) an integer encodes the coefficient
vector of a polynomial in x, base p, lowest digit first.
"""

import numpy as np

from powerdecoding.ff import Field
from powerdecoding.poly import Poly

# a prime field and an extension field
F5 = Field(5)
F8 = Field(2, 3)          # default modulus is the lowest irreducible, x^3 + x + 1
print(F8.describe(), F8.modulus)

# scalar arithmetic goes through FieldElement
a, b = F5(3), F5(4)
print("3*4 in GF(5):", a * b, "  1/2:", F5(2).inverse())

# x * x^2 = x^3 = x + 1 in GF(8); codes 2, 4 and 3
print("x * x^2 in GF(8):", F8(2) * F8(4), F8(3).vector)

# the array interface is vectorised
print(F8.mul(np.arange(8), 5))

# polynomials are immutable and keep coefficients lowest degree first
x = Poly.x(F5)
p = (x + 1) * (x - 1)
print("(x+1)(x-1) =", p.tolist())
print("divmod by x+1:", [q.tolist() for q in divmod(p, x + 1)])
print("rev(x^2+2x) =", Poly(F5, [0, 2, 1]).rev().tolist())
print("1/(1-x) mod x^4 =", Poly(F5, [1, -1]).series_inv(4).tolist())

# interpolation through all points of GF(5) recovers a random polynomial
rng = np.random.default_rng(0)
f = Poly(F5, rng.integers(0, 5, 5))
print(Poly.interpolate(F5, range(5), f(np.arange(5))) == f)
