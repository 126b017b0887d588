# Coloured links as linking matrices.
#
# A link enters only through its linking matrix (framings on the diagonal)
# and an integer colour per component.  The Wilson line expectation value
# in S^3 is exp(-2 pi i Q / 4k) with Q = q.L.q.

from abelian_cs import ColouredLinkingData, observable_s3
from abelian_cs.links import equivalent_knot, simplicial_satellite, sum_components

hopf = ColouredLinkingData.from_lists([[0, 1], [1, 0]], [1, 1])
print("Hopf link Q =", hopf.quadratic_form())
for k in (1, 2, 3):
    print(f"  k={k}: <W> = {observable_s3(hopf, k).value}")

# a component of colour q is replaced by q parallel copies of colour 1
link = ColouredLinkingData.from_lists([[1, 2], [2, 0]], [2, -1])
sat = simplicial_satellite(link)
print("satellite matrix:")
for row in sat.matrix:
    print("  ", row)
print("same Q:", sat.quadratic_form(), "==", link.quadratic_form())

# band-summing two equally coloured components keeps Q, so the whole link
# behaves like one framed knot
merged = sum_components(hopf, 0, 1)
print("Hopf band sum ->", merged.matrix, "; equivalent knot framing", equivalent_knot(hopf))
print("values agree:", observable_s3(merged, 3) == observable_s3(hopf, 3))
