import numpy as np
import pytest

from wgm.errors import EmptyGraph, EndpointOutOfRange, NodeOutOfRange
from wgm.graph import build_graph, degree_of, mean_degree

from conftest import distinct_random_edges, random_edge_list, seeded_graph
from oracles import degrees_by_edge_scan


def test_empty_edge_list_gives_isolated_nodes():
    g = build_graph([], 3)
    assert g.node_count == 3
    assert g.edge_count == 0


def test_duplicates_and_self_loops_dropped():
    g = build_graph([(0, 1), (0, 1), (1, 1)], 2)
    assert g.edge_count == 1
    assert g.dropped_self_loops == 1
    assert g.dropped_duplicates == 1


def test_cycle_degrees(cycle3):
    for node in range(3):
        d = degree_of(cycle3, node)
        assert (d.indegree, d.outdegree, d.degree) == (1, 1, 2)


def test_star_center_degree(star6):
    d = degree_of(star6, 0)
    assert (d.indegree, d.outdegree, d.degree) == (0, 5, 5)


def test_degree_of_matches_edge_scan_oracle():
    edges = random_edge_list(10, 30, seed=11)
    g = build_graph(edges, 10)
    dedup = {(a, b) for a, b in edges if a != b}
    indeg, outdeg = degrees_by_edge_scan(dedup, 10)
    for node in range(10):
        d = degree_of(g, node)
        assert d.indegree == indeg[node]
        assert d.outdegree == outdeg[node]


def test_mean_degree_cycle(cycle3):
    assert mean_degree(cycle3) == 2.0


def test_mean_degree_exact_on_250_edges():
    g = seeded_graph(100, 250, seed=5)
    assert g.edge_count == 250
    assert mean_degree(g) == 5.0
    assert sum(degree_of(g, u).degree for u in range(100)) == 2 * 250


def test_endpoint_out_of_range():
    with pytest.raises(EndpointOutOfRange):
        build_graph([(0, 3)], 3)
    with pytest.raises(EndpointOutOfRange):
        build_graph([(-1, 0)], 3)


def test_node_out_of_range(cycle3):
    with pytest.raises(NodeOutOfRange):
        degree_of(cycle3, 3)
    with pytest.raises(NodeOutOfRange):
        cycle3.out_neighbors(-1)


def test_mean_degree_empty_graph():
    with pytest.raises(EmptyGraph):
        mean_degree(build_graph([], 0))


def test_degree_sums_equal_edge_count():
    g = build_graph(random_edge_list(30, 120, seed=2), 30)
    assert int(g.indegrees().sum()) == g.edge_count
    assert int(g.outdegrees().sum()) == g.edge_count


def test_round_trip_through_edge_enumeration():
    g = build_graph(random_edge_list(20, 70, seed=3), 20)
    h = build_graph(g.edges(), 20)
    assert h.edge_count == g.edge_count
    assert np.array_equal(h.edges(), g.edges())
    for u in range(20):
        assert np.array_equal(h.in_neighbors(u), g.in_neighbors(u))


def test_out_and_in_adjacency_agree():
    g = build_graph(random_edge_list(25, 90, seed=6), 25)
    for u in range(25):
        for v in g.out_neighbors(u):
            assert u in g.in_neighbors(int(v))
        for v in g.in_neighbors(u):
            assert u in g.out_neighbors(int(v))


def test_adjacency_is_sorted():
    g = build_graph(distinct_random_edges(25, 90, seed=4), 25)
    for u in range(25):
        out = g.out_neighbors(u)
        assert np.array_equal(out, np.sort(out))
        inn = g.in_neighbors(u)
        assert np.array_equal(inn, np.sort(inn))


def test_titles_must_match_node_count():
    with pytest.raises(EndpointOutOfRange):
        build_graph([], 2, titles=["only one"])


def test_adjacency_arrays_immutable(cycle3):
    with pytest.raises(ValueError):
        cycle3.out_neighbors(0)[0] = 99
