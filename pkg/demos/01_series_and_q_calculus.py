"""Truncated h-series and the q-calculus built on q = e^h.

Every series carries its truncation order; arithmetic is exact (rational
coefficients, no rounding), and combining different orders is an error
rather than a silent re-truncation.
"""

from fractions import Fraction

from twistkit import HSeries, Poly, q_analog, q_factorial, series_exp_h

# A series is just its coefficient list: 1 + h + h^2/2 at order 2.
a = HSeries([1, 1, Fraction(1, 2)])
print("a          =", a)
print("a * a      =", a * a)
print("a^-1       =", a.inverse())
print("sqrt(1+2h+h^2) =", HSeries([1, 2, 1]).sqrt())

# q = e^h lives here as exp(h*x); with x = 1 this is the scalar q itself.
q = series_exp_h(1, 4)
print("\nq = e^h    =", q)
print("q * q^-1   =", q * series_exp_h(-1, 4))

# q-analogues stay polynomial in their argument: [x] = x + (x^3-x)/6 h^2 + ...
x = Poly.symbol("x")
print("\n[x] at order 4:")
print("   ", q_analog(x, 4))

# at integer arguments they reduce to the scalar q-numbers: [2] = q + 1/q
print("[2] at order 4:", q_analog(Fraction(2), 4))
print("[3]! at order 4:", q_factorial(3, 4))
