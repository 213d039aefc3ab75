"""Generalized quaternions H(a,b) and octonions O(a,b,c) in action.

Shows the basis products, the quadratic-algebra structure (conjugate,
trace, norm), and the doubling product that cross-checks the 8x8 table.
"""

import random

from kpotent import OctAlgebra, PrimeField, QuatAlgebra, RationalField, cd_double_mul

f5 = PrimeField(5)
H = QuatAlgebra(f5, -1, -1)
one, f1, f2, f3 = H.basis()

print("H(-1,-1) over F5 basis products:")
print("  f1*f2 =", f1 * f2, " f2*f1 =", f2 * f1, " f3*f3 =", f3 * f3)

x = H.element((2, 3, 1, 3))
print("\nx =", x)
print("conjugate:", x.conjugate())
print("trace:", x.trace(), " norm:", x.norm())
print("x satisfies x^2 - t x + n = 0:", x.satisfies_quadratic_identity())
print("powers:", ", ".join(str(x ** k) for k in range(1, 6)))
print("so x^5 = x: a 5-potent element")

# -- octonions -------------------------------------------------------------------

O = OctAlgebra(RationalField(), -1, -1, -1)
rng = random.Random(1)
a, b, c = (O.random_element(rng) for _ in range(3))

print("\nOctonions are not associative:")
print("  (a*b)*c == a*(b*c):", (a * b) * c == a * (b * c))
print("but alternative and flexible:")
print("  (a*a)*b == a*(a*b):", (a * a) * b == a * (a * b))
print("  a*(b*a) == (a*b)*a:", a * (b * a) == (a * b) * a)
print("and the Moufang identity holds:")
print("  ((a*b)*a)*c == a*(b*(a*c)):", ((a * b) * a) * c == a * (b * (a * c)))

print("\nNorms are multiplicative: n(a*b) == n(a)n(b):",
      (a * b).norm() == a.norm() * b.norm())

print("\nThe doubling product agrees with the table:",
      all(cd_double_mul(O.basis_element(i), O.basis_element(j))
          == O.basis_element(i) * O.basis_element(j)
          for i in range(8) for j in range(8)))
