# U(1) invariants of lens spaces and their connected sums.
#
# L(9,1) and L(9,2) have the same first homology Z/9 but different
# invariants at k = 3, so I_k sees more than H_1.

from abelian_cs import lens_presentation, rt_invariant
from abelian_cs.cyclotomic import pretty
from abelian_cs.invariants import connected_sum, genus_times_circle, lens_closed_form, reciprocity_check

for (p, r), k in [((5, 1), 2), ((5, 2), 2), ((9, 1), 3), ((9, 2), 3), ((7, 1), 3), ((7, 2), 3)]:
    B = lens_presentation(p, r)
    print(f"I_{k}(L({p},{r})) = {pretty(rt_invariant(B, k).value):12s} presentation {B}")

a = connected_sum(lens_presentation(9, 1), lens_presentation(7, 1))
b = connected_sum(lens_presentation(9, 2), lens_presentation(7, 2))
print("I_3 of the sums:", pretty(rt_invariant(a, 3).value), pretty(rt_invariant(b, 3).value))

# the one-term closed form for [[p]] agrees with the colour sum
print(all(lens_closed_form(p, k).value == rt_invariant([[p]], k).value
          for p in range(2, 13) for k in range(1, 5)))

for g in range(3):
    print(f"Sigma_{g} x S1 at k=2:", pretty(rt_invariant(genus_times_circle(g), 2).value))

print("reciprocity (1,0,2):", reciprocity_check(1, 0, 2))
