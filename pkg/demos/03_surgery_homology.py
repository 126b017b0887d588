# First homology of a surgered manifold from its linking matrix.

from abelian_cs import first_homology, smith_normal_form
from abelian_cs.homology import determinant, is_homology_sphere
from abelian_cs.invariants import catalog

for name, B in catalog().items():
    d = smith_normal_form(B).diagonal if B else ()
    print(f"{name:16s} det={determinant(B) if B else 1:4d}  factors={d}  H1={first_homology(B)}"
          f"{'  (homology sphere)' if is_homology_sphere(B) else ''}")

# the chain [[3,1],[1,2]] and the single unknot [[5]] give the same group
print(first_homology([[3, 1], [1, 2]]) == first_homology([[5]]))
