"""Structural equivalence of vertices and the partition into equivalence classes.

Two vertices are structurally equivalent when swapping just those two is an
automorphism.  That holds exactly when they are twins:
``N(u) - {v} == N(v) - {u}``.  Adjacent twins share closed neighborhoods
(true twins), non-adjacent twins share open neighborhoods (false twins).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum
from itertools import combinations

from .errors import ConsistencyError
from .graph import Graph


class ClassKind(str, Enum):
    CLIQUE = "clique"
    INDEPENDENT = "independent"
    SINGLETON = "singleton"


def _check_pair(g: Graph, u: int, v: int) -> None:
    if u == v:
        raise ValueError("structural equivalence is defined for two distinct vertices")
    if not (0 <= u < g.n and 0 <= v < g.n):
        raise ValueError(f"vertices ({u}, {v}) out of range for n={g.n}")


def is_transposition_automorphism(g: Graph, u: int, v: int) -> bool:
    """Brute force: does swapping ``u`` and ``v`` map the edge set onto itself?"""
    _check_pair(g, u, v)
    swap = {u: v, v: u}
    edges = {frozenset(e) for e in g.edges()}
    image = {frozenset((swap.get(a, a), swap.get(b, b))) for a, b in g.edges()}
    return image == edges


def are_structurally_equivalent(g: Graph, u: int, v: int) -> bool:
    _check_pair(g, u, v)
    return g.adj[u] - {v} == g.adj[v] - {u}


@dataclass(frozen=True)
class Partition:
    """Equivalence classes ordered by descending size, then smallest member."""

    classes: tuple[tuple[int, ...], ...]
    kinds: tuple[ClassKind, ...]

    @property
    def s(self) -> int:
        """Number of classes."""
        return len(self.classes)

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(len(c) for c in self.classes)

    @property
    def n(self) -> int:
        return sum(self.sizes)

    def class_index(self) -> list[int]:
        """``class_index()[v]`` is the index of the class containing ``v``."""
        index = [0] * self.n
        for i, members in enumerate(self.classes):
            for v in members:
                index[v] = i
        return index

    def to_dict(self) -> dict:
        return {
            "classes": [
                {"members": list(members), "kind": kind.value}
                for members, kind in zip(self.classes, self.kinds)
            ]
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: dict) -> "Partition":
        classes = tuple(tuple(c["members"]) for c in data["classes"])
        kinds = tuple(ClassKind(c["kind"]) for c in data["classes"])
        return cls(classes, kinds)


def _class_kind(g: Graph, members: tuple[int, ...]) -> ClassKind:
    if len(members) == 1:
        return ClassKind.SINGLETON
    adjacent = {g.has_edge(a, b) for a, b in combinations(members, 2)}
    if len(adjacent) != 1:
        raise ConsistencyError(f"class {members} mixes edges and non-edges")
    return ClassKind.CLIQUE if adjacent.pop() else ClassKind.INDEPENDENT


def equivalence_classes(g: Graph) -> Partition:
    # bucket by open neighborhood (false twins) and closed neighborhood (true twins)
    parent = list(range(g.n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for key_of in (lambda v: g.adj[v], lambda v: g.adj[v] | {v}):
        first: dict[frozenset[int], int] = {}
        for v in range(g.n):
            root = first.setdefault(key_of(v), v)
            if root != v:
                parent[find(v)] = find(root)

    groups: dict[int, list[int]] = {}
    for v in range(g.n):
        groups.setdefault(find(v), []).append(v)
    classes = sorted((tuple(m) for m in groups.values()), key=lambda c: (-len(c), c[0]))

    # closure check: the pairwise relation must agree with the merged classes
    for members in classes:
        for a, b in combinations(members, 2):
            if not are_structurally_equivalent(g, a, b):
                raise ConsistencyError(f"vertices {a} and {b} merged but not equivalent")

    return Partition(tuple(classes), tuple(_class_kind(g, c) for c in classes))
