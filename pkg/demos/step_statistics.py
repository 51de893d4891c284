"""Step-path sums and where f_s acts when it is applied phi_s times."""

from krcrystal import Params, PolytopePoint
from krcrystal.pathstats import saturate, stat_bundle

a = PolytopePoint(Params(6, 3, 20), [[2, 0, 2], [0, 1, 2], [1, 2, 1], [1, 0, 5]])
for s in (1, 2):
    b = stat_bundle(a, s)
    print(f"s={s}: S={b.S} R={b.R} x={b.x} phi_s={a.phi(s)}")

print("f_2^{phi_2}:", saturate(a, 2).rows)
