"""
Prime graphs of SEP groups
==========================

Vertices are the primes up to the largest class size alpha.  Primes p > q are
joined when both fit in one class (p + q <= alpha) or in two different classes
(p <= alpha, q <= beta).  The brute-force oracle builds element orders from
cycle types and has to agree.
"""

from skelkit import (
    SepSignature,
    complete,
    has_k_clique,
    is_complete_prime_graph,
    oracle_prime_graph,
    prime_graph_of_sep,
    sep_series,
)

for sizes in [(7,), (5, 3), (3, 2), (7, 1), (11, 7, 2)]:
    sig = SepSignature(sizes)
    pg = prime_graph_of_sep(sig)
    same = pg == oracle_prime_graph(sig)
    print(f"{str(sizes):12s} V={list(pg.vertices)} E={pg.sorted_edges()} oracle={same} "
          f"complete={is_complete_prime_graph(sig)}")

# triangles need alpha >= 5 + 3 in one class, or two roomy classes
print(has_k_clique(SepSignature((7,)), 3), has_k_clique(SepSignature((8,)), 3),
      has_k_clique(SepSignature((5, 3)), 3))

# %%
# Feeding each prime graph back in as a graph gives a strictly shrinking
# series that always bottoms out at the single vertex 2 or at nothing.
for n in (3, 7, 12, 30):
    series = sep_series(complete(n))
    print(f"K_{n}:", " -> ".join(str(list(s.vertices)) for s in series.steps))
