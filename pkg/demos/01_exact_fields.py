"""Walkthrough of the three exact coefficient fields.

Everything is integer/fraction arithmetic in canonical form; printing and
parsing round-trip bit for bit.
"""

from fractions import Fraction

from kpotent import NotASquareError, PrimeField, QuadraticField, RationalField

# -- residues mod an odd prime ------------------------------------------------

f5 = PrimeField(5)
print("F5:", f5.element(3), "+", f5.element(4), "=", f5.element(3) + f5.element(4))
print("F5: inverse of 3 is", f5.element(3).inv())
print("F5: sqrt(4) =", f5.element(4).sqrt(), "(the smaller of the two roots)")
try:
    f5.element(2).sqrt()
except NotASquareError as exc:
    print("F5:", exc)

# -- arbitrary-precision rationals ---------------------------------------------

q = RationalField()
big = q.element(Fraction(10**40 + 1, 3))
print("\nQ: exact large fraction:", big * q.element(3) - q.element(1), "== 10^40")
print("Q: sqrt(9/4) =", q.element(Fraction(9, 4)).sqrt())

# -- the quadratic extension Q(sqrt d) ------------------------------------------

q2 = QuadraticField(2)
x = q2.parse("1+1s")       # 1 + sqrt(2); "s" denotes sqrt(d)
y = q2.parse("1-1s")
print("\nQ(sqrt2): (1+s)(1-s) =", x * y)
print("Q(sqrt2): 1/(1+s) =", x.inv())
print("Q(sqrt2): sqrt(8) =", q2.element(8).sqrt(), "  (2*sqrt(2))")

# printing follows the same grammar the parser accepts
z = q2.element((Fraction(1, 2), Fraction(-3, 4)))
print("Q(sqrt2): canonical printing:", z, "-> parses back:", q2.parse(str(z)) == z)
