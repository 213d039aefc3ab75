"""Producing k-potent, idempotent, tripotent and nilpotent elements, then
transporting them to 4x4/8x8 matrices with the same power behaviour.

This is the headline workflow: pick a construction, get an exact element,
classify it, and read off matrices M with M^k = M.
"""

from fractions import Fraction

from kpotent import (
    PrimeField,
    QuadraticField,
    QuatAlgebra,
    RationalField,
    classify,
    left_rep,
    rotor_generate,
    split_generate,
)

HALF = Fraction(1, 2)

# -- rotors: unit quaternions with exact cos/sin -----------------------------------

HQ = QuatAlgebra(RationalField(), -1, -1)
for k, direction in [(3, (1, 1, 1)), (4, (1, -1, 1)), (7, (1, 1, 1))]:
    x = rotor_generate(k, direction, HQ)
    rep = classify(x, k)
    print(f"k={k}: x = {x}  ->  {rep.kind} of index {rep.index}, norm {rep.norm}")

Hq2 = QuatAlgebra(QuadraticField(2), -1, -1)
x5 = rotor_generate(5, (1, -1, (0, 1)), Hq2)
print(f"k=5 over Q(sqrt2): x = {x5}  ->  index {classify(x5, 5).index}")

m = left_rep(x5)
print("matrix transport: L(x)^4 == I:", m ** 4 == m ** 0)
print(m.to_csv())

# -- split algebras: norm-zero constructions ----------------------------------------

H11 = QuatAlgebra(RationalField(), 1, 1)
q = split_generate("idempotent", H11, (1, 1, 1))
w = split_generate("tripotent", H11, (1, 1, 1))
z = split_generate("nilpotent", QuatAlgebra(QuadraticField(2), 1, 1),
                   (HALF, HALF, (0, HALF)))

print("\nsplit H(1,1):")
print("  idempotent:", q, "  q*q == q:", q * q == q)
print("  tripotent:", w, "  w^3 == w, w^2 != w:", w ** 3 == w and w ** 2 != w)
print("  nilpotent:", z, "  z*z == 0:", (z * z).is_zero)

mq = left_rep(q)
print("matrix transport: M^2 == M:", mq ** 2 == mq)

# the same construction works over prime fields when the scaling root exists
H13 = QuatAlgebra(PrimeField(13), -1, -1)
e = split_generate("idempotent", H13, (1, 3, 0))
print("\nidempotent over F13:", e, " e*e == e:", e * e == e)
