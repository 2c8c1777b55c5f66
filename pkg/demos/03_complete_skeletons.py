"""
Complete skeletons
==================

Cliques of true twins collapse into weighted super-nodes K_a.  False twins are
not adjacent, so they cannot be merged and stay as separate K_1 nodes.
"""

import random

from skelkit import (
    Skeleton,
    are_isomorphic,
    complete_skeleton,
    conflate,
    cycle,
    figure3_graph,
    pineapple,
    reconstruct,
    skeleton_by_fixed_point,
    trivial_reconfiguration,
)
from skelkit.errors import ConflationError

g = figure3_graph()
skel = complete_skeleton(g)
print("sizes", skel.sizes, "edges", sorted(skel.edges))
print(skel.to_dot())

# the structure is a 4-cycle; blow it back up and we get the graph again
print(are_isomorphic(skel.structure(), cycle(4)), reconstruct(skel) == g)

# %%
# The same skeleton falls out of repeated conflation, whatever the order.
rng = random.Random(1)
print(all(skeleton_by_fixed_point(g, rng) == skel for _ in range(20)))

pine = complete_skeleton(pineapple(4, 2))
print("pineapple sizes", pine.sizes)

# %%
# C_4 has no adjacent twins, so nothing conflates.
try:
    conflate(trivial_reconfiguration(cycle(4)), 0, 1)
except ConflationError as exc:
    print(exc)

# any structure with any sizes is a valid skeleton
print(reconstruct(Skeleton.from_structure(cycle(4), [2, 1, 3, 1])).num_edges)
