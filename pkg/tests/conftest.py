from __future__ import annotations

import random
from functools import lru_cache
from itertools import combinations

import pytest
from hypothesis import strategies as st

from skelkit.enumeration import enumerate_graphs
from skelkit.graph import Graph

RANDOM_SEED = 20201
RANDOM_COUNT = 200
RANDOM_MAX_N = 30


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    return Graph.from_edges(n, [e for e in combinations(range(n), 2) if rng.random() < p])


def random_twinny_graph(rng: random.Random, n: int) -> Graph:
    """Random graph with planted true and false twins, so classes are non-trivial."""
    base_n = max(1, n // 3)
    base = random_graph(rng, base_n, rng.random())
    owner = list(range(base_n)) + [rng.randrange(base_n) for _ in range(n - base_n)]
    true_twin = [rng.random() < 0.5 for _ in range(n)]
    edges = []
    for u, v in combinations(range(n), 2):
        a, b = owner[u], owner[v]
        if a == b:
            if true_twin[a]:
                edges.append((u, v))
        elif base.has_edge(a, b):
            edges.append((u, v))
    return Graph.from_edges(n, edges)


@lru_cache(maxsize=None)
def random_graph_set() -> tuple[Graph, ...]:
    """Fixed pseudo-random set: half plain G(n, p), half with planted twins."""
    rng = random.Random(RANDOM_SEED)
    out = []
    for i in range(RANDOM_COUNT):
        n = rng.randint(1, RANDOM_MAX_N)
        out.append(random_graph(rng, n, rng.random()) if i % 2 else random_twinny_graph(rng, n))
    return tuple(out)


@lru_cache(maxsize=None)
def graphs_up_to(n: int) -> tuple[Graph, ...]:
    """One representative of every isomorphism class on 1..n vertices."""
    return tuple(f.to_graph() for k in range(1, n + 1) for f in enumerate_graphs(k))


def all_labeled_graphs(n: int):
    pairs = list(combinations(range(n), 2))
    for code in range(1 << len(pairs)):
        yield Graph.from_edges(n, [e for i, e in enumerate(pairs) if code >> i & 1])


@st.composite
def graphs(draw, max_n: int = 12, min_n: int = 0) -> Graph:
    n = draw(st.integers(min_n, max_n))
    pairs = list(combinations(range(n), 2))
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [e for e, keep in zip(pairs, mask) if keep])


@pytest.fixture(scope="session")
def random_graphs() -> tuple[Graph, ...]:
    return random_graph_set()


def pytest_terminal_summary(terminalreporter):
    try:
        from tests.test_acceptance import RESULTS
    except ImportError:
        try:
            from test_acceptance import RESULTS
        except ImportError:
            return
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(RESULTS, key=lambda k: (int(k.split(".")[0].rstrip("abc")), k)):
        ok, text = RESULTS[key]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] criterion {key}: {text}")


def swept_signatures(max_alpha: int = 20, max_classes: int = 4):
    """Every descending size tuple with entries <= max_alpha and 1..max_classes parts."""
    from skelkit.sep_group import SepSignature

    def rec(prefix, cap):
        if prefix:
            yield SepSignature(tuple(prefix))
        if len(prefix) < max_classes:
            for a in range(cap, 0, -1):
                yield from rec(prefix + [a], a)

    yield from rec([], max_alpha)
