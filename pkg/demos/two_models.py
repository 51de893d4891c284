"""Walk B^{2,2}_3 in both realizations side by side.

Every lowering step on a polytope point is mirrored on its tableau image,
and the two stay matched through the affine node 0 as well.
"""

from krcrystal import Params, highest_weight_point, highest_weight_tableau
from krcrystal.core import hook_content_count
from krcrystal.polytope import enumerate_points
from krcrystal.tableau import enumerate_tableaux, to_matrix

p = Params(3, 2, 2)
print(f"|B| = {sum(1 for _ in enumerate_points(p))}, "
      f"|SSYT| = {sum(1 for _ in enumerate_tableaux(p))}, "
      f"hook-content = {hook_content_count(p)}")

a, t = highest_weight_point(p), highest_weight_tableau(p)
for lab in (2, 2, 1, 3, 0, 3, 0):
    b, u = a.f(lab), t.f(lab)
    if b is None:
        assert u is None
        print(f"f_{lab}: annihilates both")
        continue
    a, t = b, u
    print(f"f_{lab}: point {a.rows}  tableau {t.rows}  matrix {to_matrix(t)}")
    assert a.weight() == t.weight()
