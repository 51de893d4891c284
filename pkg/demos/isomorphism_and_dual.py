"""Compare crystal graphs, export one to DOT, and look for dual relabelings."""

from krcrystal import Params
from krcrystal.iso import build_graph, dual_graph, find_label_permutations, graphs_isomorphic, to_dot

p = Params(3, 2, 2)
gp = build_graph(p, "polytope", include_affine=True)
gt = build_graph(p, "tableau", include_affine=True)
ok, mapping = graphs_isomorphic(gp, gt)
print(f"{len(gp.vertices)} vertices, {len(gp.edges)} edges, isomorphic: {ok}")

print("\n".join(list(to_dot(build_graph(Params(2, 1, 1), "tableau", include_affine=True)))))

for i in (1, 2, 3):
    d = dual_graph(build_graph(Params(3, i, 1), "tableau"))
    for j in (i, 4 - i):
        perms = find_label_permutations(d, build_graph(Params(3, j, 1), "tableau"))
        shown = [tuple(perm[lab] for lab in (1, 2, 3)) for perm in perms]
        print(f"dual(B^{i},1) vs B^{j},1: label images of (1,2,3) {shown}")
