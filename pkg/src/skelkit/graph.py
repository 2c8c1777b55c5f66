"""Simple undirected graphs: representation, text formats, distances, generators.

Vertices are always the integers ``0..n-1``.  External labels (for example the
1-based labels used when a graph is drawn by hand) live in ``Graph.labels`` and
are only used for display.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence

from .errors import GraphParseError

#: Distance marker for vertex pairs in different components.
UNREACHABLE = math.inf

GRAPH6_MAX_N = 62


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph on vertices ``0..n-1``.

    ``adj[v]`` is the neighbor set of ``v``.  Equality ignores ``labels``.
    """

    n: int
    adj: tuple[frozenset[int], ...]
    labels: tuple | None = field(default=None, compare=False)

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("vertex count must be non-negative")
        if len(self.adj) != self.n:
            raise ValueError(f"expected {self.n} adjacency sets, got {len(self.adj)}")
        for v, nbrs in enumerate(self.adj):
            if v in nbrs:
                raise ValueError(f"self-loop at vertex {v}")
            for u in nbrs:
                if not 0 <= u < self.n:
                    raise ValueError(f"neighbor {u} of vertex {v} out of range")
                if v not in self.adj[u]:
                    raise ValueError(f"asymmetric adjacency between {v} and {u}")
        if self.labels is not None and len(self.labels) != self.n:
            raise ValueError("labels must have one entry per vertex")

    @classmethod
    def from_edges(
        cls, n: int, edges: Iterable[tuple[int, int]], labels: Sequence | None = None
    ) -> "Graph":
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        return cls(n, tuple(frozenset(s) for s in nbrs), tuple(labels) if labels else None)

    @classmethod
    def from_masks(cls, masks: Sequence[int]) -> "Graph":
        """Build from per-vertex neighbor bitmasks."""
        n = len(masks)
        return cls(n, tuple(frozenset(u for u in range(n) if m >> u & 1) for m in masks))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"

    @cached_property
    def masks(self) -> tuple[int, ...]:
        """Neighbor sets as integer bitmasks."""
        return tuple(sum(1 << u for u in nbrs) for nbrs in self.adj)

    def edges(self) -> list[tuple[int, int]]:
        return sorted((u, v) for u in range(self.n) for v in self.adj[u] if u < v)

    @property
    def num_edges(self) -> int:
        return sum(len(a) for a in self.adj) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def label(self, v: int):
        return v if self.labels is None else self.labels[v]

    def vertex_of(self, label) -> int:
        """Inverse of :meth:`label`."""
        if self.labels is None:
            return int(label)
        return self.labels.index(label)

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Graph with vertex ``v`` renamed to ``perm[v]``."""
        if sorted(perm) != list(range(self.n)):
            raise ValueError("perm must be a permutation of range(n)")
        return Graph.from_edges(self.n, ((perm[u], perm[v]) for u, v in self.edges()))

    def complement(self) -> "Graph":
        full = set(range(self.n))
        return Graph(self.n, tuple(frozenset(full - a - {v}) for v, a in enumerate(self.adj)))

    def without_edges(self, edges: Iterable[tuple[int, int]]) -> "Graph":
        drop = {frozenset(e) for e in edges}
        keep = [e for e in self.edges() if frozenset(e) not in drop]
        return Graph.from_edges(self.n, keep, self.labels)

    def adjacency_matrix(self) -> list[list[int]]:
        return [[1 if u in self.adj[v] else 0 for u in range(self.n)] for v in range(self.n)]


# ---------------------------------------------------------------------------
# text formats
# ---------------------------------------------------------------------------


def parse_edge_list(text: str) -> Graph:
    """Parse ``u v`` lines, with an optional leading ``n <count>`` header.

    Blank lines and ``#`` comments are ignored.  Duplicate edges collapse.
    """
    declared: int | None = None
    edges: list[tuple[int, int]] = []
    seen_content = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "n":
            if seen_content:
                raise GraphParseError("'n' header must come first", lineno)
            if len(parts) != 2 or not parts[1].isdigit():
                raise GraphParseError(f"bad header {raw.strip()!r}", lineno)
            declared = int(parts[1])
            seen_content = True
            continue
        seen_content = True
        if len(parts) != 2 or not (parts[0].isdigit() and parts[1].isdigit()):
            raise GraphParseError(f"expected two non-negative integers, got {raw.strip()!r}", lineno)
        u, v = int(parts[0]), int(parts[1])
        if u == v:
            raise GraphParseError(f"self-loop at vertex {u} (simple graphs only)", lineno)
        if declared is not None and max(u, v) >= declared:
            raise GraphParseError(f"vertex {max(u, v)} exceeds declared count {declared}", lineno)
        edges.append((u, v))
    n = declared if declared is not None else 1 + max((max(e) for e in edges), default=-1)
    return Graph.from_edges(n, edges)


def to_edge_list(g: Graph) -> str:
    lines = [f"n {g.n}"] + [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def _pairs(n: int):
    # graph6 bit order: column by column over the upper triangle
    for j in range(1, n):
        for i in range(j):
            yield i, j


def to_graph6(g: Graph) -> str:
    if g.n > GRAPH6_MAX_N:
        raise ValueError(f"graph6 encoder supports n <= {GRAPH6_MAX_N}")
    bits = [1 if g.has_edge(i, j) else 0 for i, j in _pairs(g.n)]
    bits += [0] * (-len(bits) % 6)
    out = [chr(63 + g.n)]
    for k in range(0, len(bits), 6):
        chunk = 0
        for b in bits[k : k + 6]:
            chunk = chunk << 1 | b
        out.append(chr(63 + chunk))
    return "".join(out)


def parse_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<") :]
    if not s:
        raise GraphParseError("empty graph6 string")
    for pos, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise GraphParseError(f"invalid graph6 byte {ch!r} at offset {pos}")
    if ord(s[0]) == 126:
        raise GraphParseError(f"only n <= {GRAPH6_MAX_N} (single-byte size header) is supported")
    n = ord(s[0]) - 63
    npairs = n * (n - 1) // 2
    nbytes = -(-npairs // 6)
    body = s[1:]
    if len(body) < nbytes:
        raise GraphParseError(f"truncated graph6 data: need {nbytes} bytes, got {len(body)}")
    if len(body) > nbytes:
        raise GraphParseError(f"trailing data after {nbytes} graph6 bytes")
    bits: list[int] = []
    for ch in body:
        val = ord(ch) - 63
        bits.extend((val >> (5 - k)) & 1 for k in range(6))
    edges = [(i, j) for b, (i, j) in zip(bits, _pairs(n)) if b]
    return Graph.from_edges(n, edges)


def to_dot(g: Graph, name: str = "G", colors: dict[int, str] | None = None,
           node_labels: dict[int, str] | None = None) -> str:
    """DOT text with vertices and edges in ascending order."""
    lines = [f"graph {name} {{"]
    for v in range(g.n):
        attrs = []
        text = node_labels.get(v) if node_labels else None
        if text is None and g.labels is not None:
            text = str(g.labels[v])
        if text is not None:
            attrs.append(f'label="{text}"')
        if colors and v in colors:
            attrs.append(f'style=filled, fillcolor="{colors[v]}"')
        lines.append(f"  {v}" + (f" [{', '.join(attrs)}]" if attrs else "") + ";")
    lines += [f"  {u} -- {v};" for u, v in g.edges()]
    lines.append("}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# distances
# ---------------------------------------------------------------------------


def bfs_distances(g: Graph, source: int) -> list[float]:
    dist: list[float] = [UNREACHABLE] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        v = queue.popleft()
        for u in g.adj[v]:
            if dist[u] == UNREACHABLE:
                dist[u] = dist[v] + 1
                queue.append(u)
    return dist


@dataclass(frozen=True)
class DistanceTable:
    d: tuple[tuple[float, ...], ...]
    diam: int


def distance_table(g: Graph) -> DistanceTable:
    rows = tuple(tuple(bfs_distances(g, v)) for v in range(g.n))
    finite = [x for row in rows for x in row if x != UNREACHABLE]
    return DistanceTable(rows, int(max(finite, default=0)))


def ith_neighborhood(g: Graph, v: int, i: int) -> frozenset[int]:
    """Vertices at distance exactly ``i`` from ``v``."""
    if not 0 <= v < g.n:
        raise ValueError(f"vertex {v} out of range")
    if i < 0:
        raise ValueError("i must be non-negative")
    return frozenset(u for u, d in enumerate(bfs_distances(g, v)) if d == i)


# ---------------------------------------------------------------------------
# generators
# ---------------------------------------------------------------------------


def empty(n: int) -> Graph:
    return Graph.from_edges(n, ())


def complete(n: int) -> Graph:
    return Graph.from_edges(n, combinations(range(n), 2))


def path(n: int) -> Graph:
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def cycle(n: int) -> Graph:
    """C_n for n >= 3; smaller n degenerate to the path on n vertices."""
    if n < 3:
        return path(n)
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def star(k: int) -> Graph:
    """K_{1,k} with center 0."""
    return Graph.from_edges(k + 1, ((0, i) for i in range(1, k + 1)))


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph.from_edges(a + b, ((i, a + j) for i in range(a) for j in range(b)))


def disjoint_union(graphs: Iterable[Graph]) -> Graph:
    edges: list[tuple[int, int]] = []
    offset = 0
    for g in graphs:
        edges += [(u + offset, v + offset) for u, v in g.edges()]
        offset += g.n
    return Graph.from_edges(offset, edges)


def pineapple(n: int, q: int) -> Graph:
    """K_n with q pendant vertices attached to vertex 0."""
    edges = list(combinations(range(n), 2))
    if q and n == 0:
        raise ValueError("pendant vertices need a clique vertex to attach to")
    edges += [(0, n + i) for i in range(q)]
    return Graph.from_edges(n + q, edges)


def figure2_graph() -> Graph:
    """Six-vertex graph whose SEP group is {id, (3 4)} while (1 6)(2 5) is an automorphism.

    Carries the hand-drawn 1-based labels; vertex ``v`` has label ``v + 1``.
    """
    labelled = [(1, 2), (2, 3), (2, 4), (2, 5), (3, 4), (3, 5), (4, 5), (5, 6)]
    return Graph.from_edges(6, [(u - 1, v - 1) for u, v in labelled], labels=range(1, 7))


def figure3_graph() -> Graph:
    """Two triangles {0,1,2} and {5,6,7}; non-adjacent hubs 3 and 4 see all six."""
    edges = [(0, 1), (0, 2), (1, 2), (5, 6), (5, 7), (6, 7)]
    edges += [(hub, v) for hub in (3, 4) for v in (0, 1, 2, 5, 6, 7)]
    return Graph.from_edges(8, edges)
