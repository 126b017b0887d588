# Wilson lines in a surgered manifold.
#
# The link sits next to the surgery link; the cross block C records how
# many times each link component winds around each surgery component.

from abelian_cs import AmbientLinkPresentation, ColouredLinkingData, observable_surgery
from abelian_cs.homology import is_homologically_trivial
from abelian_cs.observables import observable_s3, observable_split_homology_sphere, push_to_sphere

knot = ColouredLinkingData.from_lists([[0]], [1])

# in S^2 x S^1 a knot that winds t times vanishes unless t = 0 mod 2k
k = 2
for t in range(5):
    p = AmbientLinkPresentation([[0]], knot, [[t]])
    print(f"S2xS1, winding {t}: {observable_surgery(p, k).value}")

# in a homology sphere there is a closed form: twist instead of sum
p = AmbientLinkPresentation([[1, 0], [0, -1]], ColouredLinkingData.from_lists([[1]], [2]), [[1], [2]])
print("split closed form:", observable_split_homology_sphere(p, 3).value,
      " surgery sum:", observable_surgery(p, 3).value)

# in the lens space [[5]] a knot winding 5 times is trivial in homology,
# so the pair can be traded for a link in S^3
p = AmbientLinkPresentation([[5]], knot, [[5]])
print("witness:", is_homologically_trivial(p, 2 * k))
s3_link = push_to_sphere(p, k)
print("link in S^3:", s3_link.matrix)
print("values:", observable_s3(s3_link, k).value, observable_surgery(p, k).value)
