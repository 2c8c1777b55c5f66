"""Prime (Gruenberg-Kegel) graphs of SEP groups and the iterated SEP series."""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from .equivalence import equivalence_classes
from .errors import CapacityError, ConsistencyError
from .graph import Graph, to_dot
from .sep_group import SepSignature, sep_signature

ORACLE_MAX_ALPHA = 30


def primes_up_to(m: int) -> list[int]:
    if m < 2:
        return []
    sieve = bytearray([1]) * (m + 1)
    sieve[0] = sieve[1] = 0
    for p in range(2, math.isqrt(m) + 1):
        if sieve[p]:
            sieve[p * p :: p] = bytearray(len(range(p * p, m + 1, p)))
    return [p for p in range(m + 1) if sieve[p]]


def nth_prime(k: int) -> int:
    """The k-th prime, 1-based; ``nth_prime(0) == 0`` by convention."""
    if k < 0:
        raise ValueError("k must be non-negative")
    if k == 0:
        return 0
    limit = 16
    while True:
        ps = primes_up_to(limit)
        if len(ps) >= k:
            return ps[k - 1]
        limit *= 2


@dataclass(frozen=True)
class PrimeGraph:
    vertices: tuple[int, ...]
    edges: frozenset[tuple[int, int]]

    def __post_init__(self) -> None:
        object.__setattr__(self, "vertices", tuple(sorted(set(self.vertices))))
        object.__setattr__(self, "edges", frozenset(tuple(sorted(e)) for e in self.edges))
        vs = set(self.vertices)
        for p in vs:
            if p < 2 or any(p % d == 0 for d in range(2, math.isqrt(p) + 1)):
                raise ValueError(f"{p} is not prime")
        for p, q in self.edges:
            if p == q or p not in vs or q not in vs:
                raise ValueError(f"bad edge {(p, q)}")

    @classmethod
    def empty(cls) -> "PrimeGraph":
        return cls((), frozenset())

    def __bool__(self) -> bool:
        return bool(self.vertices)

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def to_graph(self) -> Graph:
        """Ordinary graph on ``0..k-1``; vertex ``i`` is labelled by the i-th prime."""
        index = {p: i for i, p in enumerate(self.vertices)}
        return Graph.from_edges(
            len(self.vertices), ((index[p], index[q]) for p, q in self.edges), labels=self.vertices
        )

    def is_complete(self) -> bool:
        k = len(self.vertices)
        return len(self.edges) == k * (k - 1) // 2

    def clique_number(self) -> int:
        """Size of a largest clique, by brute force."""
        for k in range(len(self.vertices), 1, -1):
            for subset in combinations(self.vertices, k):
                if all(pair in self.edges for pair in combinations(subset, 2)):
                    return k
        return min(1, len(self.vertices))

    def is_proper_subgraph_of(self, other: "PrimeGraph") -> bool:
        """Labelled containment with strictly fewer vertices."""
        return set(self.vertices) < set(other.vertices) and self.edges <= other.edges

    def to_dict(self) -> dict:
        return {"vertices": list(self.vertices), "edges": [list(e) for e in self.sorted_edges()]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    def to_dot(self, name: str = "PrimeGraph") -> str:
        return to_dot(self.to_graph(), name=name)


def prime_graph_of_sep(sig: SepSignature) -> PrimeGraph:
    """Closed form: pq is an edge iff p + q <= alpha, or max(p,q) <= alpha and min(p,q) <= beta."""
    alpha, beta = sig.alpha, sig.beta
    vertices = primes_up_to(alpha)
    edges = {
        (q, p)
        for q, p in combinations(vertices, 2)
        if p + q <= alpha or (p <= alpha and q <= beta)
    }
    return PrimeGraph(tuple(vertices), frozenset(edges))


@lru_cache(maxsize=None)
def _prime_divisors_of_factorial(m: int) -> frozenset[int]:
    # trial-divide every k <= m; independent of the sieve
    found: set[int] = set()
    for k in range(2, m + 1):
        x, d = k, 2
        while d * d <= x:
            while x % d == 0:
                found.add(d)
                x //= d
            d += 1
        if x > 1:
            found.add(x)
    return frozenset(found)


@lru_cache(maxsize=None)
def _orders_dividing(m: int, p: int, q: int) -> frozenset[int]:
    """Element orders in S_m that divide pq, via cycle types with parts in {p, q, pq}."""
    parts = (p, q, p * q)
    orders: set[int] = set()

    def walk(i: int, room: int, acc: int) -> None:
        if i == len(parts):
            orders.add(acc)
            return
        length = parts[i]
        count = 0
        while count * length <= room:
            walk(i + 1, room - count * length, math.lcm(acc, length) if count else acc)
            count += 1

    walk(0, m, 1)
    return frozenset(orders)


def oracle_prime_graph(sig: SepSignature, max_alpha: int = ORACLE_MAX_ALPHA) -> PrimeGraph:
    """Prime graph by definition: primes dividing the order, edge iff some element has order pq."""
    if sig.alpha > max_alpha:
        raise CapacityError(f"oracle limited to alpha <= {max_alpha}, got {sig.alpha}")
    vertices: set[int] = set()
    for size in sig.sizes:
        vertices |= _prime_divisors_of_factorial(size)
    edges = set()
    for p, q in combinations(sorted(vertices), 2):
        reachable = {1}
        for size in sig.sizes:
            local = _orders_dividing(size, p, q)
            reachable = {math.lcm(a, b) for a in reachable for b in local}
        if p * q in reachable:
            edges.add((p, q))
    return PrimeGraph(tuple(vertices), frozenset(edges))


def has_k_clique(sig: SepSignature, k: int) -> bool:
    """Closed-form clique test; uses the convention that the 0th prime is 0."""
    if k < 1:
        raise ValueError("k must be positive")
    pk, pk1 = nth_prime(k), nth_prime(k - 1)
    if sig.alpha >= pk + pk1:
        return True
    return sig.s >= 2 and sig.alpha >= pk and sig.beta >= pk1


def is_complete_prime_graph(sig: SepSignature) -> int | None:
    """Return n when the prime graph is K_n (n >= 1), else None."""
    n = len(primes_up_to(sig.alpha))
    if n == 0:
        return None
    if nth_prime(n + 1) > sig.alpha >= nth_prime(n) and sig.beta >= nth_prime(n - 1):
        return n
    return None


@dataclass(frozen=True)
class SepSeries:
    steps: tuple[PrimeGraph, ...]

    @property
    def length(self) -> int:
        return len(self.steps)

    @property
    def minimal(self) -> PrimeGraph | None:
        return self.steps[-1] if self.steps else None

    def to_dict(self) -> dict:
        return {"length": self.length, "steps": [s.to_dict() for s in self.steps]}


def prime_graph_of_graph(g: Graph) -> PrimeGraph:
    return prime_graph_of_sep(sep_signature(equivalence_classes(g)))


def sep_series(g: Graph) -> SepSeries:
    """Iterate the prime graph of the SEP group until it is empty."""
    steps: list[PrimeGraph] = []
    current = g
    # each step strictly shrinks the vertex set, so n + 1 rounds always suffice
    for _ in range(g.n + 2):
        nxt = prime_graph_of_graph(current)
        if not nxt:
            return SepSeries(tuple(steps))
        if steps and not nxt.is_proper_subgraph_of(steps[-1]):
            raise ConsistencyError(f"series failed to descend: {steps[-1]} -> {nxt}")
        steps.append(nxt)
        current = nxt.to_graph()
    raise ConsistencyError("SEP series did not terminate")

