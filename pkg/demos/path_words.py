"""Reach a polytope point from the highest weight element.

The inductive word mixes raising and lowering operators and works for
every node; near the ends of the diagram a lowering-only word exists too.
"""

from krcrystal import Params, PolytopePoint, apply_word, highest_weight_point, render_word, word_full_path
from krcrystal.iso import image_of
from krcrystal.words import explicit_image_small_i, p_formula_word, word_P_small_i

target = PolytopePoint(Params(5, 3, 9), [[0, 1, 1], [1, 3, 4], [1, 3, 1]])
word = word_full_path(target)
print("word:", render_word(word))

trace = []
apply_word(word, highest_weight_point(target.params), trace=trace)
for factor, count, state in trace:
    print(f"  {factor.render():>14} x{count:<2} -> {state.rows}")

# the lowering-only formula is exact for i <= 2 ...
a = PolytopePoint(Params(4, 2, 3), [[1, 0], [0, 1], [2, 0]])
print("P word:", render_word(word_P_small_i(a)))
print("image:", image_of(a).rows, "closed form agrees:", explicit_image_small_i(a) == image_of(a))

# ... and lands somewhere else for i = 3
b = PolytopePoint(Params(5, 3, 11), [[0, 1, 1], [1, 3, 1], [1, 3, 4]])
print("naive formula at i=3 reaches", apply_word(p_formula_word(b), highest_weight_point(b.params)).rows)
