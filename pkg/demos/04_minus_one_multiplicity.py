"""
The eigenvalue -1
=================

Twins in a clique give equal rows of I + A, so rank(I + A) only sees the
skeleton structure.  The multiplicity of -1 is n - rank, computed exactly.
Floating-point eigenvalues are shown only for comparison.
"""

import numpy as np

from skelkit import (
    charpoly,
    charpoly_multiplicity_oracle,
    complete,
    disjoint_union,
    path,
    spectral_report,
)

left = disjoint_union([complete(k) for k in range(1, 5)])
right = disjoint_union([complete(3), complete(4).without_edges([(0, 1), (0, 2)])])

for name, g in [("K1+K2+K3+K4", left), ("K3 + (K4 minus a P3)", right), ("P5", path(5))]:
    r = spectral_report(g)
    print(f"{name:22s} rank={r.rank_I_plus_A} |S|={r.skeleton_vertices} "
          f"lambda={r.lambda_} :: {r.summary()}")

# %%
# Exact check through the characteristic polynomial
print(charpoly(complete(4)), charpoly_multiplicity_oracle(left))

# %%
# numpy agrees here, but only up to a tolerance we would have to pick
eig = np.linalg.eigvalsh(np.array(left.adjacency_matrix(), dtype=float))
print(np.sum(np.isclose(eig, -1.0)), np.round(eig, 6))
