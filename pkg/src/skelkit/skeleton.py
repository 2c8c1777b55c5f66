"""Complete skeletons: clique super-nodes joined completely or not at all.

The skeleton of a graph groups each clique of true twins into one super-node
``K_a``.  False twins (independent classes) stay as separate ``K_1`` nodes,
since only adjacent nodes may be merged.  Reading the skeleton as a plain
graph gives its *structure*, the usual compression graph.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from .equivalence import ClassKind, equivalence_classes
from .errors import ConflationError, ConsistencyError
from .graph import Graph, to_dot


@dataclass(frozen=True)
class SuperNode:
    size: int
    members: tuple[int, ...]


@dataclass(frozen=True)
class Skeleton:
    nodes: tuple[SuperNode, ...]
    edges: frozenset[tuple[int, int]]

    @classmethod
    def build(cls, nodes: Sequence[SuperNode], edges) -> "Skeleton":
        """Sort nodes canonically (size descending, then smallest member) and remap edges."""
        order = sorted(range(len(nodes)), key=lambda i: (-nodes[i].size, min(nodes[i].members)))
        where = {old: new for new, old in enumerate(order)}
        remapped = frozenset(tuple(sorted((where[a], where[b]))) for a, b in edges)
        return cls(tuple(nodes[i] for i in order), remapped)

    @classmethod
    def from_structure(cls, structure: Graph, sizes: Sequence[int]) -> "Skeleton":
        """Blow each structure vertex up to a clique of the given size.

        Member ids are assigned consecutively in structure-vertex order.
        """
        if len(sizes) != structure.n or any(a < 1 for a in sizes):
            raise ValueError("need one positive size per structure vertex")
        nodes, start = [], 0
        for a in sizes:
            nodes.append(SuperNode(a, tuple(range(start, start + a))))
            start += a
        return cls.build(nodes, structure.edges())

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(node.size for node in self.nodes)

    def neighbors(self, i: int) -> set[int]:
        return {b if a == i else a for a, b in self.edges if i in (a, b)}

    def structure(self) -> Graph:
        return Graph.from_edges(len(self.nodes), self.edges)

    def to_dict(self) -> dict:
        return {
            "nodes": [{"size": nd.size, "members": list(nd.members)} for nd in self.nodes],
            "edges": [list(e) for e in sorted(self.edges)],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    def to_dot(self, name: str = "Skeleton") -> str:
        labels = {i: f"K_{nd.size}" for i, nd in enumerate(self.nodes)}
        return to_dot(self.structure(), name=name, node_labels=labels)


def _joined(g: Graph, a: Sequence[int], b: Sequence[int]) -> bool | None:
    """True if every a-b pair is an edge, False if none is, None if mixed."""
    count = sum(1 for u in a for v in b if g.has_edge(u, v))
    if count == 0:
        return False
    if count == len(a) * len(b):
        return True
    return None


def complete_skeleton(g: Graph) -> Skeleton:
    partition = equivalence_classes(g)
    nodes: list[SuperNode] = []
    for members, kind in zip(partition.classes, partition.kinds):
        if kind is ClassKind.INDEPENDENT:
            nodes.extend(SuperNode(1, (v,)) for v in members)
        else:
            nodes.append(SuperNode(len(members), members))
    edges = []
    for i, j in combinations(range(len(nodes)), 2):
        joined = _joined(g, nodes[i].members, nodes[j].members)
        if joined is None:
            raise ConsistencyError(
                f"super-nodes {nodes[i].members} and {nodes[j].members} are partially joined"
            )
        if joined:
            edges.append((i, j))
    return Skeleton.build(nodes, edges)


def skeleton_structure(g: Graph) -> Graph:
    return complete_skeleton(g).structure()


def trivial_reconfiguration(g: Graph) -> Skeleton:
    """Every vertex its own ``K_1``; super-edges are the edges of ``g``."""
    return Skeleton(tuple(SuperNode(1, (v,)) for v in range(g.n)), frozenset(g.edges()))


def conflation_obstacle(skel: Skeleton, a: int, b: int) -> str | None:
    """Why nodes ``a`` and ``b`` cannot conflate, or None if they can."""
    if a == b:
        return "a node cannot conflate with itself"
    if tuple(sorted((a, b))) not in skel.edges:
        return f"nodes {a} and {b} are not adjacent"
    na, nb = skel.neighbors(a) - {b}, skel.neighbors(b) - {a}
    if na != nb:
        odd = min(na ^ nb)
        owner = a if odd in na else b
        return f"node {odd} is adjacent to node {owner} only"
    return None


def conflate(skel: Skeleton, a: int, b: int) -> Skeleton:
    """Merge adjacent nodes with identical outside neighborhoods into ``K_{a+b}``."""
    reason = conflation_obstacle(skel, a, b)
    if reason is not None:
        raise ConflationError(f"cannot conflate {a} and {b}: {reason}")
    merged = SuperNode(
        skel.nodes[a].size + skel.nodes[b].size,
        tuple(sorted(skel.nodes[a].members + skel.nodes[b].members)),
    )
    keep = [i for i in range(len(skel.nodes)) if i not in (a, b)]
    nodes = [skel.nodes[i] for i in keep] + [merged]
    where = {old: new for new, old in enumerate(keep)}
    where[a] = where[b] = len(keep)
    edges = {tuple(sorted((where[x], where[y]))) for x, y in skel.edges if {x, y} != {a, b}}
    return Skeleton.build(nodes, edges)


def conflatable_pairs(skel: Skeleton) -> list[tuple[int, int]]:
    return [e for e in sorted(skel.edges) if conflation_obstacle(skel, *e) is None]


def skeleton_by_fixed_point(g: Graph, rng: random.Random | None = None) -> Skeleton:
    """Conflate from the trivial reconfiguration until no pair qualifies.

    Pairs are taken in sorted order, or in random order when ``rng`` is given.
    """
    skel = Skeleton.build(trivial_reconfiguration(g).nodes, g.edges())
    while True:
        pairs = conflatable_pairs(skel)
        if not pairs:
            return skel
        a, b = rng.choice(pairs) if rng is not None else pairs[0]
        skel = conflate(skel, a, b)


def is_skeleton_structure(g: Graph) -> bool:
    """No two adjacent vertices are structurally equivalent."""
    return not any(g.adj[u] - {v} == g.adj[v] - {u} for u, v in g.edges())


def reconstruct(skel: Skeleton) -> Graph:
    """Expand each node to a clique on its members and join across super-edges."""
    n = sum(skel.sizes)
    members = [nd.members for nd in skel.nodes]
    if sorted(v for m in members for v in m) != list(range(n)):
        raise ValueError("skeleton members must partition 0..n-1")
    edges = [e for m in members for e in combinations(m, 2)]
    for i, j in skel.edges:
        edges += [(u, v) for u in members[i] for v in members[j]]
    return Graph.from_edges(n, edges)
