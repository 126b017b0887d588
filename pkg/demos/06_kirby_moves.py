# Kirby moves on linking matrices, and a fuzzing run.

from abelian_cs import AmbientLinkPresentation, lens_presentation
from abelian_cs.kirby import handle_slide, invariant_profile, kirby_check, random_move_sequence, stabilize

p = AmbientLinkPresentation([[1, 0], [0, 1]])
print("slide:", handle_slide(p, 0, 1, 1).surgery)
print("blow up:", stabilize(AmbientLinkPresentation([[0]]), -1).surgery)

q, log = random_move_sequence(AmbientLinkPresentation(lens_presentation(9, 1)), 6, seed=42, k=3)
print("moves:", log)
print("result:", q.surgery)
for key, value in invariant_profile(q, 3).items():
    print(f"  {key}: {value}")

report = kirby_check(AmbientLinkPresentation(lens_presentation(7, 2)), 3, 8, 1)
print("PASS" if report.passed else report.mismatches)
