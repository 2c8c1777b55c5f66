"""
Structurally equivalent vertices
================================

Two vertices are structurally equivalent when swapping them is an automorphism.
That is the same as being twins, so the classes come straight from neighborhoods.
"""

from itertools import permutations

from skelkit import (
    Permutation,
    are_structurally_equivalent,
    contains,
    equivalence_classes,
    figure2_graph,
    is_transposition_automorphism,
    pineapple,
    sep_order,
    sep_signature,
)

# K_4 with two pendants hanging off vertex 0
g = pineapple(4, 2)
p = equivalence_classes(g)
for members, kind in zip(p.classes, p.kinds):
    print(f"{kind.value:12s} {members}")

# the twin test and the brute-force swap agree
print(are_structurally_equivalent(g, 4, 5), is_transposition_automorphism(g, 4, 5))
print(are_structurally_equivalent(g, 0, 4), is_transposition_automorphism(g, 0, 4))

# %%
# The group generated by these swaps is a product of symmetric groups,
# one per class, so its order is the product of factorials.
sig = sep_signature(p)
print("sizes", sig.sizes, "alpha", sig.alpha, "beta", sig.beta, "order", sep_order(sig))

# %%
# A six-vertex graph with vertices labelled 1..6. Only 3 and 4 are twins.
h = figure2_graph()
labels = [h.label(v) for v in range(h.n)]
hp = equivalence_classes(h)
members = [Permutation(img) for img in permutations(range(h.n)) if contains(hp, Permutation(img))]
print([m.format(labels) for m in members], "order", sep_order(sep_signature(hp)))

# (1 6)(2 5) looks like a reflection but is not even an automorphism
u, v = h.vertex_of(1), h.vertex_of(6)
print("(1 6) automorphism?", is_transposition_automorphism(h, u, v))
