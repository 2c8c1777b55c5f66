"""
Small skeleton structures
=========================

Enumerate graphs up to isomorphism, keep those with no adjacent twins, and
record rank(I + A) and the correction term lambda = n - rank.
"""

from collections import Counter

from skelkit import enumerate_graphs, enumerate_skeleton_structures, rank_catalog

for n in range(1, 8):
    entries = enumerate_skeleton_structures(n)
    odd = [(e.name, e.lambda_) for e in entries if e.lambda_]
    print(f"n={n}: {len(enumerate_graphs(n))} graphs, {len(entries)} structures, "
          f"{len(odd)} with lambda > 0")

print([e.name for e in enumerate_skeleton_structures(4)])
print([e.name for e in enumerate_skeleton_structures(5)])

# %%
# P_5 is the first structure whose rank falls short of its size
print([(e.name, e.rank) for e in enumerate_skeleton_structures(5) if e.lambda_])
print(Counter(e.lambda_ for e in enumerate_skeleton_structures(6)))

# %%
# ranks 1, 2, 3 have very few structures behind them
catalog = rank_catalog(6)
for r in (1, 2, 3):
    print(r, [e.name for e in catalog[r]])
