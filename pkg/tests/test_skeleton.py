from __future__ import annotations

import json
import random
from itertools import combinations

import pytest
from hypothesis import given, settings

from skelkit.enumeration import are_isomorphic
from skelkit.errors import ConflationError
from skelkit.graph import (
    complete,
    complete_bipartite,
    cycle,
    disjoint_union,
    empty,
    figure3_graph,
    path,
    pineapple,
    star,
)
from skelkit.skeleton import (
    Skeleton,
    SuperNode,
    complete_skeleton,
    conflatable_pairs,
    conflate,
    conflation_obstacle,
    is_skeleton_structure,
    reconstruct,
    skeleton_by_fixed_point,
    skeleton_structure,
    trivial_reconfiguration,
)

from .conftest import graphs, graphs_up_to, random_graph_set


def test_figure3_skeleton():
    skel = complete_skeleton(figure3_graph())
    assert skel.sizes == (3, 3, 1, 1)
    assert [nd.members for nd in skel.nodes] == [(0, 1, 2), (5, 6, 7), (3,), (4,)]
    assert skel.edges == {(0, 2), (0, 3), (1, 2), (1, 3)}
    assert are_isomorphic(skel.structure(), cycle(4))


def test_pineapple_skeleton_splits_pendants():
    skel = complete_skeleton(pineapple(4, 2))
    assert skel.sizes == (3, 1, 1, 1)
    assert are_isomorphic(skel.structure(), star(3))


def test_complete_graph_is_one_node():
    for n in range(1, 7):
        skel = complete_skeleton(complete(n))
        assert skel.sizes == (n,) and not skel.edges


def test_conflate_k2():
    skel = conflate(trivial_reconfiguration(complete(2)), 0, 1)
    assert skel.nodes == (SuperNode(2, (0, 1)),) and not skel.edges


def test_conflating_a_triangle_of_figure3():
    skel = trivial_reconfiguration(figure3_graph())
    skel = conflate(skel, 0, 1)
    # the merged node sorts first; vertex 2 is now node 1
    assert skel.nodes[0] == SuperNode(2, (0, 1)) and skel.nodes[1].members == (2,)
    skel = conflate(skel, 0, 1)
    assert skel.nodes[0] == SuperNode(3, (0, 1, 2))
    assert skel.neighbors(0) == {i for i, nd in enumerate(skel.nodes) if nd.members in ((3,), (4,))}


def test_c4_cannot_conflate():
    skel = trivial_reconfiguration(cycle(4))
    assert conflatable_pairs(skel) == []
    for a, b in skel.edges:
        with pytest.raises(ConflationError, match="node"):
            conflate(skel, a, b)
    with pytest.raises(ConflationError, match="not adjacent"):
        conflate(skel, 0, 2)


def test_obstacle_names_the_neighbor():
    skel = trivial_reconfiguration(path(3))
    assert conflation_obstacle(skel, 0, 1) == "node 2 is adjacent to node 1 only"
    assert conflation_obstacle(skel, 1, 1) is not None


def test_fixed_point_examples():
    g = figure3_graph()
    assert skeleton_by_fixed_point(g) == complete_skeleton(g)
    assert skeleton_by_fixed_point(complete(4)).sizes == (4,)
    assert skeleton_by_fixed_point(path(5)).sizes == (1,) * 5


def test_fixed_point_agrees_on_all_graphs_up_to_8():
    for g in graphs_up_to(8):
        assert skeleton_by_fixed_point(g) == complete_skeleton(g)


def test_fixed_point_is_confluent_under_random_orders():
    rng = random.Random(11)
    for g in graphs_up_to(7):
        expected = complete_skeleton(g)
        for _ in range(2):
            assert skeleton_by_fixed_point(g, rng) == expected


def test_fixed_point_agrees_on_random_graphs(random_graphs):
    rng = random.Random(3)
    for g in random_graphs:
        assert skeleton_by_fixed_point(g, rng) == complete_skeleton(g)


def test_is_skeleton_structure_examples():
    assert is_skeleton_structure(path(5))
    assert not is_skeleton_structure(complete(3))
    assert is_skeleton_structure(cycle(4))
    assert is_skeleton_structure(empty(3))
    assert is_skeleton_structure(complete(1))


def test_reconstruct_examples():
    fig3 = Skeleton.from_structure(cycle(4), [3, 1, 3, 1])
    assert are_isomorphic(reconstruct(fig3), figure3_graph())
    assert reconstruct(Skeleton.from_structure(complete(1), [5])) == complete(5)
    two = reconstruct(Skeleton.from_structure(empty(2), [2, 3]))
    assert are_isomorphic(two, disjoint_union([complete(2), complete(3)]))


def test_reconstruct_rejects_bad_members():
    bad = Skeleton((SuperNode(1, (0,)), SuperNode(1, (2,))), frozenset())
    with pytest.raises(ValueError):
        reconstruct(bad)


def _check_skeleton(g):
    skel = complete_skeleton(g)
    members = [nd.members for nd in skel.nodes]
    assert sorted(v for m in members for v in m) == list(range(g.n))
    for nd in skel.nodes:
        assert nd.size == len(nd.members)
        assert all(g.has_edge(u, v) for u, v in combinations(nd.members, 2))
    for i, j in combinations(range(len(members)), 2):
        count = sum(g.has_edge(u, v) for u in members[i] for v in members[j])
        joined = (min(i, j), max(i, j)) in skel.edges
        assert count == (len(members[i]) * len(members[j]) if joined else 0)
    assert conflatable_pairs(skel) == []
    structure = skel.structure()
    assert is_skeleton_structure(structure)
    # reconstruct is exact, not just up to isomorphism: members keep their ids
    assert reconstruct(skel) == g
    again = complete_skeleton(structure)
    assert set(again.sizes) <= {1}
    assert again.structure() == structure
    keys = [(-nd.size, nd.members[0]) for nd in skel.nodes]
    assert keys == sorted(keys)


def test_skeleton_invariants_on_all_graphs_up_to_7():
    for g in graphs_up_to(7):
        _check_skeleton(g)


@settings(deadline=None)
@given(graphs(max_n=14))
def test_skeleton_invariants_property(g):
    _check_skeleton(g)


def test_skeleton_invariants_on_random_graphs():
    for g in random_graph_set():
        _check_skeleton(g)


def test_false_twins_stay_split():
    skel = complete_skeleton(complete_bipartite(2, 3))
    assert skel.sizes == (1,) * 5
    assert skeleton_structure(complete_bipartite(2, 3)) == complete_bipartite(2, 3)


def test_serialization():
    skel = complete_skeleton(pineapple(4, 2))
    data = json.loads(skel.to_json())
    assert data["nodes"][0] == {"size": 3, "members": [1, 2, 3]}
    # vertex 0 (node 1) is the hub joined to the K_3 and both pendants
    assert data["edges"] == [[0, 1], [1, 2], [1, 3]]
    dot = skel.to_dot()
    assert 'label="K_3"' in dot and 'label="K_1"' in dot
