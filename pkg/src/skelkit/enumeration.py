"""Small-graph enumeration up to isomorphism and skeleton-structure catalogs.

Canonical forms come from an individualization-refinement search: colour
refinement splits the vertices into an ordered partition, ties are broken by
individualizing each vertex of the first non-trivial cell in turn, and the
smallest adjacency bitstring over all leaves is the canonical form.  Twins in
the branching cell give identical subtrees and are skipped.
"""

from __future__ import annotations

import csv
import io
import json
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations

from .errors import CapacityError
from .graph import (
    Graph,
    complete_bipartite,
    cycle,
    disjoint_union,
    empty,
    path,
    star,
    to_graph6,
)
from .skeleton import is_skeleton_structure
from .spectral import rank_I_plus_A

CANONICAL_MAX_N = 8
ENUMERATE_MAX_N = 8
BRUTE_MAX_N = 7


@dataclass(frozen=True, order=True)
class CanonicalForm:
    """Vertex count plus the upper-triangular adjacency bitstring in graph6 order."""

    n: int
    bits: str

    def to_graph(self) -> Graph:
        edges = []
        pos = 0
        for j in range(1, self.n):
            for i in range(j):
                if self.bits[pos] == "1":
                    edges.append((i, j))
                pos += 1
        return Graph.from_edges(self.n, edges)

    @property
    def graph6(self) -> str:
        return to_graph6(self.to_graph())


def _certificate(masks: list[int], order: list[int]) -> int:
    n = len(order)
    cert = 0
    for j in range(1, n):
        row = masks[order[j]]
        for i in range(j):
            cert = cert << 1 | (row >> order[i] & 1)
    return cert


def _refine(masks: list[int], cells: list[list[int]]) -> list[list[int]]:
    while True:
        cell_masks = [sum(1 << v for v in cell) for cell in cells]
        out: list[list[int]] = []
        split = False
        for cell in cells:
            if len(cell) == 1:
                out.append(cell)
                continue
            groups: dict[tuple[int, ...], list[int]] = {}
            for v in cell:
                key = tuple((masks[v] & cm).bit_count() for cm in cell_masks)
                groups.setdefault(key, []).append(v)
            if len(groups) > 1:
                split = True
            out.extend(groups[k] for k in sorted(groups))
        cells = out
        if not split:
            return cells


def _canonical_cert(masks: list[int]) -> int:
    n = len(masks)
    best: list[int | None] = [None]

    def search(cells: list[list[int]]) -> None:
        cells = _refine(masks, cells)
        target = next((i for i, c in enumerate(cells) if len(c) > 1), None)
        if target is None:
            cert = _certificate(masks, [c[0] for c in cells])
            if best[0] is None or cert < best[0]:
                best[0] = cert
            return
        cell = cells[target]
        tried: list[int] = []
        for v in cell:
            # a twin of an explored vertex swaps to it by an automorphism fixing the partition
            if any((masks[v] & ~(1 << w)) == (masks[w] & ~(1 << v)) for w in tried):
                continue
            tried.append(v)
            rest = [u for u in cell if u != v]
            search(cells[:target] + [[v], rest] + cells[target + 1 :])

    search([list(range(n))])
    return best[0] if best[0] is not None else 0


def _form(n: int, cert: int) -> CanonicalForm:
    width = n * (n - 1) // 2
    return CanonicalForm(n, format(cert, f"0{width}b") if width else "")


def canonical_form(g: Graph) -> CanonicalForm:
    if g.n > CANONICAL_MAX_N:
        raise CapacityError(f"canonical form limited to n <= {CANONICAL_MAX_N}, got {g.n}")
    return _form(g.n, _canonical_cert(list(g.masks)))


def brute_canonical_form(g: Graph) -> CanonicalForm:
    """Minimum bitstring over all n! orderings; slow reference for small n."""
    if g.n > BRUTE_MAX_N:
        raise CapacityError(f"brute-force canonical form limited to n <= {BRUTE_MAX_N}")
    masks = list(g.masks)
    return _form(g.n, min(_certificate(masks, list(p)) for p in permutations(range(g.n))))


def are_isomorphic(g: Graph, h: Graph) -> bool:
    return g.n == h.n and g.num_edges == h.num_edges and canonical_form(g) == canonical_form(h)


# ---------------------------------------------------------------------------
# enumeration
# ---------------------------------------------------------------------------


def _extensions(bits: str, n: int) -> set[str]:
    """Canonical forms of graphs on n vertices whose top-degree vertex deletion gives ``bits``."""
    base = list(_form(n - 1, int(bits, 2) if bits else 0).to_graph().masks)
    found = set()
    for nbrs in range(1 << (n - 1)):
        masks = [m | ((nbrs >> v & 1) << (n - 1)) for v, m in enumerate(base)] + [nbrs]
        # every graph arises by deleting a vertex of maximum degree, so only keep those
        top = nbrs.bit_count()
        if any(m.bit_count() > top for m in masks):
            continue
        found.add(_form(n, _canonical_cert(masks)).bits)
    return found


def _workers() -> int:
    try:
        return max(1, int(os.environ.get("SKELKIT_THREADS", "1")))
    except ValueError:
        return 1


@lru_cache(maxsize=None)
def _enumerate_bits(n: int, workers: int) -> tuple[str, ...]:
    if n <= 1:
        return ("",) if n == 1 else ()
    smaller = _enumerate_bits(n - 1, workers)
    found: set[str] = set()
    if workers > 1 and len(smaller) > 50:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for part in pool.map(_extensions, smaller, [n] * len(smaller), chunksize=16):
                found |= part
    else:
        for bits in smaller:
            found |= _extensions(bits, n)
    return tuple(sorted(found))


def enumerate_graphs(n: int, workers: int | None = None) -> list[CanonicalForm]:
    """All simple graphs on ``n`` vertices up to isomorphism, sorted by canonical form.

    Parallelism defaults to the ``SKELKIT_THREADS`` environment variable (1 if unset).
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    if n > ENUMERATE_MAX_N:
        raise CapacityError(f"enumeration limited to n <= {ENUMERATE_MAX_N}, got {n}")
    if n == 0:
        return [CanonicalForm(0, "")]
    workers = workers if workers is not None else _workers()
    return [CanonicalForm(n, b) for b in _enumerate_bits(n, workers)]


# ---------------------------------------------------------------------------
# catalogs
# ---------------------------------------------------------------------------


_SMALL_NAMED = {
    "chair": [(0, 1), (1, 2), (1, 3), (3, 4)],
    "bull": [(0, 1), (1, 2), (0, 2), (0, 3), (2, 4)],
    "banner": [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4)],
    "house": [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2)],
    "dart": [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3), (1, 4)],
    "gem": [(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (2, 3), (3, 4)],
    "W_4": [(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (2, 3), (3, 4), (4, 1)],
}


def _named_graphs(max_n: int) -> list[tuple[str, Graph]]:
    named: list[tuple[str, Graph]] = [("K_1", empty(1))]
    connected: list[tuple[str, Graph]] = []
    for k in range(3, max_n + 1):
        connected.append((f"P_{k}", path(k)))
        if k >= 4:
            connected.append((f"C_{k}", cycle(k)))
            connected.append((f"K_{{1,{k - 1}}}", star(k - 1)))
    for a in range(2, max_n // 2 + 1):
        for b in range(a, max_n - a + 1):
            connected.append((f"K_{{{a},{b}}}", complete_bipartite(a, b)))
    if max_n >= 5:
        for name, edges in _SMALL_NAMED.items():
            connected.append((name, Graph.from_edges(5, edges)))
    for k in range(2, max_n + 1):
        named.append((f"{k}K_1", empty(k)))
    for name, g in connected:
        named.append((name, g))
        for iso in range(1, max_n - g.n + 1):
            prefix = "K_1" if iso == 1 else f"{iso}K_1"
            named.append((f"{prefix}+{name}", disjoint_union([empty(iso), g])))
    return named


@lru_cache(maxsize=None)
def _name_table(max_n: int) -> dict[CanonicalForm, str]:
    table: dict[CanonicalForm, str] = {}
    for name, g in _named_graphs(max_n):
        table.setdefault(canonical_form(g), name)
    return table


def graph_name(g: Graph) -> str:
    """Conventional name when known (``P_4``, ``K_1+P_3``, ...), otherwise graph6."""
    if g.n <= CANONICAL_MAX_N:
        name = _name_table(CANONICAL_MAX_N).get(canonical_form(g))
        if name is not None:
            return name
    return to_graph6(g)


@dataclass(frozen=True)
class CatalogEntry:
    form: CanonicalForm
    name: str
    rank: int
    lambda_: int

    @property
    def graph6(self) -> str:
        return self.form.graph6

    def to_dict(self) -> dict:
        return {"graph6": self.graph6, "name": self.name, "rank": self.rank, "lambda": self.lambda_}


def catalog_entry(form: CanonicalForm) -> CatalogEntry:
    g = form.to_graph()
    rank = rank_I_plus_A(g)
    return CatalogEntry(form, graph_name(g), rank, g.n - rank)


def enumerate_skeleton_structures(n: int, workers: int | None = None) -> list[CatalogEntry]:
    """Graphs on n vertices with no adjacent structurally equivalent pair, with rank and lambda.

    A skeleton structure is its own structure, so its lambda is ``n - rank(I + A)``.
    """
    forms = enumerate_graphs(n, workers)
    return [catalog_entry(f) for f in forms if is_skeleton_structure(f.to_graph())]


def rank_catalog(n: int, workers: int | None = None) -> dict[int, list[CatalogEntry]]:
    """Skeleton structures on 1..n vertices grouped by rank(I + A)."""
    out: dict[int, list[CatalogEntry]] = {}
    for k in range(1, n + 1):
        for entry in enumerate_skeleton_structures(k, workers):
            out.setdefault(entry.rank, []).append(entry)
    return dict(sorted(out.items()))


def catalog_to_csv(entries: list[CatalogEntry]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["graph6", "name", "rank", "lambda"])
    for e in entries:
        writer.writerow([e.graph6, e.name, e.rank, e.lambda_])
    return buf.getvalue()


def catalog_to_json(entries: list[CatalogEntry]) -> str:
    return json.dumps([e.to_dict() for e in entries])

