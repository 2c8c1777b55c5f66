from __future__ import annotations

import json
import random
from itertools import combinations

import pytest
from hypothesis import given

from skelkit.equivalence import (
    ClassKind,
    Partition,
    are_structurally_equivalent,
    equivalence_classes,
    is_transposition_automorphism,
)
from skelkit.graph import (
    complete,
    cycle,
    disjoint_union,
    distance_table,
    empty,
    figure2_graph,
    ith_neighborhood,
    path,
    pineapple,
)

from .conftest import all_labeled_graphs, graphs, graphs_up_to, random_graph


def _lab(g, *labels):
    return [g.vertex_of(x) for x in labels]


def test_transposition_examples():
    g = figure2_graph()
    assert is_transposition_automorphism(g, *_lab(g, 3, 4))
    assert not is_transposition_automorphism(g, *_lab(g, 1, 6))
    assert not is_transposition_automorphism(g, *_lab(g, 2, 5))
    assert all(is_transposition_automorphism(complete(3), u, v) for u, v in combinations(range(3), 2))


def test_same_vertex_is_an_argument_error():
    with pytest.raises(ValueError):
        is_transposition_automorphism(path(3), 1, 1)
    with pytest.raises(ValueError):
        are_structurally_equivalent(path(3), 1, 1)


def test_twin_examples():
    g = pineapple(4, 2)
    assert are_structurally_equivalent(g, 4, 5)
    assert not are_structurally_equivalent(g, 4, 0)
    assert not are_structurally_equivalent(path(4), 0, 3)


def test_classes_examples():
    p = equivalence_classes(pineapple(4, 2))
    assert p.sizes == (3, 2, 1)
    assert p.classes == ((1, 2, 3), (4, 5), (0,))
    assert p.kinds == (ClassKind.CLIQUE, ClassKind.INDEPENDENT, ClassKind.SINGLETON)

    g = figure2_graph()
    p = equivalence_classes(g)
    assert [sorted(g.label(v) for v in c) for c in p.classes] == [[3, 4], [1], [2], [5], [6]]

    assert equivalence_classes(complete(6)).sizes == (6,)


def test_isolated_vertices_form_independent_class():
    p = equivalence_classes(disjoint_union([empty(3), path(2)]))
    assert p.classes == ((0, 1, 2), (3, 4))
    assert p.kinds == (ClassKind.INDEPENDENT, ClassKind.CLIQUE)


def test_partition_json_round_trip():
    p = equivalence_classes(pineapple(4, 2))
    data = json.loads(p.to_json())
    assert data == {
        "classes": [
            {"members": [1, 2, 3], "kind": "clique"},
            {"members": [4, 5], "kind": "independent"},
            {"members": [0], "kind": "singleton"},
        ]
    }
    assert Partition.from_dict(data) == p


def test_twin_test_matches_oracle_exhaustive_small():
    for n in range(2, 6):
        for g in all_labeled_graphs(n):
            for u, v in combinations(range(n), 2):
                assert are_structurally_equivalent(g, u, v) == is_transposition_automorphism(g, u, v)


def test_twin_test_matches_oracle_all_graphs_up_to_8():
    # the relation is isomorphism invariant, so one graph per class covers n <= 8
    for g in graphs_up_to(8):
        for u, v in combinations(range(g.n), 2):
            assert are_structurally_equivalent(g, u, v) == is_transposition_automorphism(g, u, v)


def test_twin_test_matches_oracle_random_large():
    rng = random.Random(7)
    for _ in range(60):
        g = random_graph(rng, rng.randint(9, 40), rng.random())
        for u, v in combinations(range(g.n), 2):
            assert are_structurally_equivalent(g, u, v) == is_transposition_automorphism(g, u, v)


def _check_partition(g):
    p = equivalence_classes(g)
    index = p.class_index()
    assert sorted(v for c in p.classes for v in c) == list(range(g.n))
    for u, v in combinations(range(g.n), 2):
        assert (index[u] == index[v]) == are_structurally_equivalent(g, u, v)
    for members, kind in zip(p.classes, p.kinds):
        edges = {g.has_edge(a, b) for a, b in combinations(members, 2)}
        if kind is ClassKind.CLIQUE:
            assert edges == {True}
        elif kind is ClassKind.INDEPENDENT:
            assert edges == {False}
        else:
            assert len(members) == 1
    keys = [(-len(c), c[0]) for c in p.classes]
    assert keys == sorted(keys)


@given(graphs(max_n=14))
def test_partition_is_the_relation(g):
    _check_partition(g)


def test_partition_on_all_graphs_up_to_7():
    for g in graphs_up_to(7):
        _check_partition(g)


def test_equivalent_pairs_are_close_and_share_layers():
    # connected graphs only; layer 0 is {u} vs {v} and never matches, so start at 1
    for g in graphs_up_to(6):
        table = distance_table(g)
        if any(d == float("inf") for row in table.d for d in row):
            continue
        for u, v in combinations(range(g.n), 2):
            same_layers = all(
                ith_neighborhood(g, u, i) - {v} == ith_neighborhood(g, v, i) - {u}
                for i in range(1, table.diam + 1)
            )
            equivalent = are_structurally_equivalent(g, u, v)
            assert equivalent == same_layers
            if equivalent:
                assert table.d[u][v] <= 2


def test_cycle_has_only_singletons_but_c4_has_false_twins():
    assert equivalence_classes(cycle(5)).sizes == (1,) * 5
    assert equivalence_classes(cycle(4)).sizes == (2, 2)
