# Exact numbers in cyclotomic fields.
#
# Every value in this package is an element of Q(zeta_M), stored as rational
# coefficients of powers of zeta_M = exp(2 pi i / M).  Nothing is rounded;
# the complex embedding is only for display.

from abelian_cs import CyclotomicNumber, root_of_unity, sqrt_positive_integer
from abelian_cs.cyclotomic import cyclotomic_polynomial, pretty

i = root_of_unity(4, 1)
print("i * i =", i * i)

# 1 + zeta_3 + zeta_3^2 vanishes, but the coefficient vector only becomes
# zero after reduction modulo Phi_3(x) = x^2 + x + 1
print("Phi_3 coefficients:", cyclotomic_polynomial(3))
w = root_of_unity(3, 1)
print("1 + w + w^2 =", 1 + w + w * w)

# mixing conductors lifts both sides to the lcm
s = i + root_of_unity(6, 1)
print("i + zeta_6 lives in conductor", s.conductor, "~", s.embed())

# square roots of positive integers come from quadratic Gauss sums
for m in (2, 3, 5, 6, 12):
    r = sqrt_positive_integer(m)
    print(f"sqrt({m}) has conductor {r.conductor}, squares to {r * r}, ~ {r.embed().real:.12f}")

# division uses the extended Euclidean algorithm modulo Phi_M
a = CyclotomicNumber(12, [1, 2, 0, 3])
print("a * a^-1 =", a * a.inverse())

# the pretty printer recognises the shapes that appear as invariants
print(pretty(sqrt_positive_integer(3) * i), pretty(-root_of_unity(8, 3) * sqrt_positive_integer(6)))
