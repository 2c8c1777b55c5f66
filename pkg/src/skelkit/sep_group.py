"""The group generated by the transpositions in Aut(G).

The group is never listed element by element: it is the direct product of the
symmetric groups on the equivalence classes, so the multiset of class sizes
(``SepSignature``) determines it up to isomorphism.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, NamedTuple, Sequence

from .equivalence import Partition


@dataclass(frozen=True)
class SepSignature:
    sizes: tuple[int, ...]

    def __post_init__(self) -> None:
        if any(s <= 0 for s in self.sizes):
            raise ValueError("class sizes must be positive")
        object.__setattr__(self, "sizes", tuple(sorted(self.sizes, reverse=True)))

    @property
    def s(self) -> int:
        return len(self.sizes)

    @property
    def alpha(self) -> int:
        """Largest class size (0 for the empty graph)."""
        return self.sizes[0] if self.sizes else 0

    @property
    def beta(self) -> int:
        """Second largest class size; 0 when there is only one class."""
        return self.sizes[1] if len(self.sizes) > 1 else 0

    @property
    def n(self) -> int:
        return sum(self.sizes)


def sep_signature(p: Partition) -> SepSignature:
    return SepSignature(p.sizes)


def sep_order(sig: SepSignature) -> int:
    return math.prod(math.factorial(k) for k in sig.sizes)


@dataclass(frozen=True)
class Permutation:
    """Bijection on ``0..n-1`` stored as its image array."""

    mapping: tuple[int, ...]

    def __post_init__(self) -> None:
        if sorted(self.mapping) != list(range(len(self.mapping))):
            raise ValueError(f"{self.mapping} is not a bijection on 0..{len(self.mapping) - 1}")

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(n)))

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]], n: int) -> "Permutation":
        image = list(range(n))
        seen: set[int] = set()
        for cyc in cycles:
            for x in cyc:
                if not 0 <= x < n:
                    raise ValueError(f"point {x} out of range for n={n}")
                if x in seen:
                    raise ValueError(f"point {x} appears in more than one cycle")
                seen.add(x)
            for a, b in zip(cyc, list(cyc[1:]) + list(cyc[:1])):
                image[a] = b
        return cls(tuple(image))

    @property
    def n(self) -> int:
        return len(self.mapping)

    def __call__(self, x: int) -> int:
        return self.mapping[x]

    def cycles(self) -> list[tuple[int, ...]]:
        """Disjoint cycles of length >= 2, each starting at its smallest point."""
        seen = [False] * self.n
        out = []
        for start in range(self.n):
            if seen[start]:
                continue
            cyc = [start]
            seen[start] = True
            x = self.mapping[start]
            while x != start:
                cyc.append(x)
                seen[x] = True
                x = self.mapping[x]
            if len(cyc) > 1:
                out.append(tuple(cyc))
        return out

    def is_identity(self) -> bool:
        return all(i == x for i, x in enumerate(self.mapping))

    def order(self) -> int:
        return math.lcm(*(len(c) for c in self.cycles())) if not self.is_identity() else 1

    def format(self, labels: Sequence | None = None) -> str:
        cycles = self.cycles()
        if not cycles:
            return "()"
        name = (lambda v: str(labels[v])) if labels is not None else str
        return "".join("(" + " ".join(name(v) for v in c) + ")" for c in cycles)

    def __str__(self) -> str:
        return self.format()


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_cycles(text: str) -> list[tuple[int, ...]]:
    """Parse cycle notation such as ``"(3 4)(1 2)"``; ``"()"`` is the identity."""
    stripped = text.strip()
    if _CYCLE_RE.sub("", stripped).strip():
        raise ValueError(f"malformed cycle notation {text!r}")
    cycles = []
    for body in _CYCLE_RE.findall(stripped):
        parts = body.replace(",", " ").split()
        if not all(p.isdigit() for p in parts):
            raise ValueError(f"malformed cycle ({body})")
        if len(parts) > 1:
            cycles.append(tuple(int(p) for p in parts))
    return cycles


def contains(p: Partition, sigma: Permutation) -> bool:
    """Is ``sigma`` in the group, i.e. does every cycle stay inside one class?"""
    if sigma.n != p.n:
        raise ValueError(f"permutation acts on {sigma.n} points, graph has {p.n} vertices")
    index = p.class_index()
    return all(len({index[x] for x in cyc}) == 1 for cyc in sigma.cycles())


class Witness(NamedTuple):
    perm: Permutation
    member: bool


def hereditary_witnesses(p: Partition, sigma: Permutation) -> list[Witness]:
    """Every proper sub-cycle of every cycle of ``sigma``, plus each disjoint cycle.

    A sub-cycle keeps the cyclic order of a subset of at least two points of a
    cycle.  A lone transposition (or the identity) has only the identity below it.
    """
    if not contains(p, sigma):
        raise ValueError(f"{sigma} is not in the group; nothing is inherited")
    n = sigma.n
    cycles = sigma.cycles()
    found: dict[tuple[int, ...], Permutation] = {}
    for cyc in cycles:
        for size in range(2, len(cyc)):
            for subset in combinations(cyc, size):
                tau = Permutation.from_cycles([subset], n)
                found.setdefault(tau.mapping, tau)
    if len(cycles) > 1:
        for cyc in cycles:
            tau = Permutation.from_cycles([cyc], n)
            found.setdefault(tau.mapping, tau)
    if not found:
        found[tuple(range(n))] = Permutation.identity(n)
    return [Witness(tau, contains(p, tau)) for tau in found.values()]
