"""Vertex sets, graph construction, products, and the builtin families."""

from __future__ import annotations

import random

import pytest

from domlab import (
    BadEdgeError,
    BadParameterError,
    BadVertexError,
    EmptyGraphError,
    SizeOverflowError,
    VertexSet,
    cartesian_product,
    closed_neighborhood,
    closed_neighborhood_set,
    complete,
    cycle,
    grid,
    is_connected,
    is_dominating,
    make_graph,
    path,
    random_gnp,
    star,
)
from helpers import naive_closed_neighborhoods, naive_product_edges, random_graph


# ---------------------------------------------------------------------------
# VertexSet
# ---------------------------------------------------------------------------


def test_vertex_set_members_round_trip():
    s = VertexSet.from_members(8, [5, 1, 3, 1])
    assert s.members == (1, 3, 5)
    assert len(s) == 3
    assert 3 in s and 0 not in s


def test_vertex_set_empty_and_full():
    assert VertexSet.empty(4).members == ()
    assert VertexSet.full(4).members == (0, 1, 2, 3)


def test_vertex_set_add_discard_are_persistent():
    s = VertexSet.from_members(6, [2])
    t = s.add(4)
    assert s.members == (2,)
    assert t.members == (2, 4)
    assert t.discard(2).members == (4,)
    assert t.discard(5).members == (2, 4)


def test_vertex_set_algebra():
    a = VertexSet.from_members(6, [0, 1, 2])
    b = VertexSet.from_members(6, [2, 3])
    assert (a | b).members == (0, 1, 2, 3)
    assert (a & b).members == (2,)
    assert (a - b).members == (0, 1)
    assert b.issubset(a | b)
    assert not a.issubset(b)


def test_vertex_set_equality_and_hash():
    a = VertexSet.from_members(5, [1, 4])
    b = VertexSet.from_members(5, [4, 1])
    assert a == b
    assert hash(a) == hash(b)
    assert a != VertexSet.from_members(6, [1, 4])


def test_vertex_set_mixed_universe_rejected():
    a = VertexSet.from_members(5, [1])
    b = VertexSet.from_members(6, [1])
    with pytest.raises(BadVertexError):
        a | b


def test_vertex_set_out_of_range_member_rejected():
    with pytest.raises(BadVertexError):
        VertexSet.from_members(3, [3])
    with pytest.raises(BadVertexError):
        VertexSet.from_members(3, [-1])


# ---------------------------------------------------------------------------
# Graph construction and validation
# ---------------------------------------------------------------------------


def test_make_graph_basic_accessors():
    g = make_graph(4, [(0, 1), (1, 2), (1, 2), (2, 3)])
    assert g.n == 4
    assert g.m == 3
    assert list(g.edges()) == [(0, 1), (1, 2), (2, 3)]
    assert g.degree(1) == 2
    assert g.has_edge(2, 1)
    assert not g.has_edge(0, 3)
    assert g.neighbors(1).members == (0, 2)


def test_empty_graph_rejected():
    with pytest.raises(EmptyGraphError):
        make_graph(0, [])


def test_self_loop_rejected():
    with pytest.raises(BadEdgeError):
        make_graph(3, [(1, 1)])


def test_edge_out_of_range_rejected():
    with pytest.raises(BadEdgeError):
        make_graph(3, [(0, 3)])
    with pytest.raises(BadEdgeError):
        make_graph(3, [(-1, 0)])


def test_graph_equality_ignores_name():
    a = make_graph(3, [(0, 1)], name="left")
    b = make_graph(3, [(1, 0)], name="right")
    assert a == b
    assert hash(a) == hash(b)
    assert a != make_graph(3, [(0, 2)])


def test_closed_neighborhood_matches_naive():
    rng = random.Random(101)
    for _ in range(40):
        g = random_graph(rng, max_n=9)
        ref = naive_closed_neighborhoods(g)
        for v in range(g.n):
            assert set(closed_neighborhood(g, v).members) == ref[v]


def test_closed_neighborhood_set_is_union():
    g = path(5)
    s = VertexSet.from_members(5, [0, 3])
    assert closed_neighborhood_set(g, s).members == (0, 1, 2, 3, 4)


def test_closed_neighborhood_bad_vertex():
    with pytest.raises(BadVertexError):
        closed_neighborhood(path(3), 3)


def test_is_dominating_examples():
    g = path(4)
    assert is_dominating(g, VertexSet.from_members(4, [1, 2]))
    assert is_dominating(g, VertexSet.from_members(4, [0, 2]))
    assert not is_dominating(g, VertexSet.from_members(4, [0, 1]))
    assert not is_dominating(g, VertexSet.empty(4))
    assert is_dominating(complete(1), VertexSet.from_members(1, [0]))


def test_is_dominating_wrong_universe():
    with pytest.raises(BadVertexError):
        is_dominating(path(4), VertexSet.from_members(5, [0]))


# ---------------------------------------------------------------------------
# Cartesian product
# ---------------------------------------------------------------------------


def test_product_index_pair_round_trip():
    pg = cartesian_product(path(3), path(4))
    for u in range(3):
        for v in range(4):
            assert pg.pair(pg.index(u, v)) == (u, v)
    assert pg.index(1, 2) == 1 * 4 + 2


def test_product_of_two_edges_is_a_four_cycle():
    pg = cartesian_product(complete(2), complete(2))
    assert pg.graph.n == 4
    assert sorted(pg.graph.edges()) == [(0, 1), (0, 2), (1, 3), (2, 3)]


def test_product_with_single_vertex_preserves_factor():
    g = cycle(5)
    left = cartesian_product(g, complete(1)).graph
    right = cartesian_product(complete(1), g).graph
    assert sorted(left.edges()) == sorted(g.edges())
    assert sorted(right.edges()) == sorted(g.edges())


def test_product_edges_match_definition():
    rng = random.Random(77)
    for _ in range(30):
        g = random_graph(rng, max_n=5)
        h = random_graph(rng, max_n=5)
        pg = cartesian_product(g, h)
        assert set(pg.graph.edges()) == naive_product_edges(g, h)


def test_product_size_guard():
    with pytest.raises(SizeOverflowError):
        cartesian_product(complete(64), complete(65))


# ---------------------------------------------------------------------------
# Families
# ---------------------------------------------------------------------------


def test_path_structure():
    g = path(5)
    assert g.m == 4
    assert [g.degree(v) for v in range(5)] == [1, 2, 2, 2, 1]
    assert path(1).m == 0


def test_cycle_structure():
    g = cycle(5)
    assert g.m == 5
    assert all(g.degree(v) == 2 for v in range(5))
    with pytest.raises(BadParameterError):
        cycle(2)


def test_complete_structure():
    g = complete(4)
    assert g.m == 6
    assert all(g.degree(v) == 3 for v in range(4))


def test_star_center_is_vertex_zero():
    g = star(5)
    assert g.n == 5
    assert g.degree(0) == 4
    assert all(g.degree(v) == 1 for v in range(1, 5))


def test_grid_is_product_of_paths():
    g = grid(3, 4)
    ref = cartesian_product(path(3), path(4)).graph
    assert g.n == 12
    assert sorted(g.edges()) == sorted(ref.edges())


def test_family_names():
    assert path(4).name == "P4"
    assert cycle(5).name == "C5"
    assert complete(3).name == "K3"
    assert star(5).name == "S5"
    assert grid(4, 4).name == "grid4x4"


def test_random_gnp_is_seed_deterministic():
    a = random_gnp(10, 0.4, seed=3)
    b = random_gnp(10, 0.4, seed=3)
    c = random_gnp(10, 0.4, seed=4)
    assert a == b
    assert a != c or sorted(a.edges()) == sorted(c.edges())


def test_random_gnp_extremes():
    assert random_gnp(6, 0.0, seed=1).m == 0
    assert random_gnp(6, 1.0, seed=1).m == 15
    with pytest.raises(BadParameterError):
        random_gnp(5, 1.5, seed=0)


def test_is_connected_examples():
    assert is_connected(path(6))
    assert is_connected(complete(1))
    assert not is_connected(make_graph(4, [(0, 1), (2, 3)]))
    assert not is_connected(make_graph(2, []))
