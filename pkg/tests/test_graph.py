import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import brute_is_biconnected, brute_nets
from pathcover.errors import (
    DuplicateEdgeError,
    NotANetError,
    NotCubicError,
    OddOrderCubicError,
    SelfLoopError,
)
from pathcover.generators import petersen, random_cubic
from pathcover.graph import build_graph, contract_net, find_nets, is_biconnected


def test_build_k4(k4):
    assert k4.n == 4 and k4.edge_count == 6
    assert k4.is_cubic()
    assert k4.adj[0] == (1, 2, 3)


def test_build_rejects_non_cubic_triangle():
    with pytest.raises(OddOrderCubicError):
        build_graph(3, [(0, 1), (1, 2), (0, 2)], require_cubic=True)


def test_build_rejects_degree_two():
    with pytest.raises(NotCubicError):
        build_graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)], require_cubic=True)


def test_build_petersen_is_cubic():
    g = petersen()
    assert g.n == 10 and g.edge_count == 15 and g.is_cubic()


def test_build_rejects_self_loop():
    with pytest.raises(SelfLoopError):
        build_graph(2, [(0, 0)])


def test_build_rejects_duplicate_edge():
    with pytest.raises(DuplicateEdgeError):
        build_graph(2, [(0, 1), (1, 0)])


def test_degree_sum_is_twice_edges(k4, k33, prism):
    for g in (k4, k33, prism):
        assert sum(g.degree(v) for v in range(g.n)) == 2 * g.edge_count


def test_biconnected_k4(k4):
    assert is_biconnected(k4)


def test_biconnected_rejects_cut_vertex(bowtie):
    assert not is_biconnected(bowtie)


def test_biconnected_rejects_path(path5):
    assert not is_biconnected(path5)


def test_biconnected_small_cases():
    assert not is_biconnected(build_graph(2, [(0, 1)]))
    assert not is_biconnected(build_graph(1, []))


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10_000), st.sampled_from([6, 8, 10, 12]))
def test_biconnected_matches_oracle(seed, n):
    g = random_cubic(n, seed)
    assert is_biconnected(g) == brute_is_biconnected(g)


def test_find_nets_k4(k4):
    assert find_nets(k4) == []


def test_find_nets_prism(prism):
    nets = find_nets(prism)
    assert [net.triangle for net in nets] == [(0, 1, 2), (3, 4, 5)]
    assert nets[0].outside == (3, 4, 5)


def test_find_nets_triangle_free(k33):
    assert find_nets(k33) == []


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10_000), st.sampled_from([8, 10, 12]))
def test_find_nets_matches_brute_scan(seed, n):
    g = random_cubic(n, seed)
    assert [net.triangle for net in find_nets(g)] == brute_nets(g)


def test_contract_prism_gives_k4(prism, k4):
    nets = find_nets(prism)
    reduced, rec = contract_net(prism, nets[0])
    assert reduced.n == 4 and reduced.is_cubic()
    assert reduced.adj == k4.adj
    assert rec.vertex_map == (0, 3, 4, 5)
    assert rec.contracted_vertex == 0


def test_contract_k4_triangle_rejected(k4):
    from pathcover.graph import Net

    with pytest.raises(NotANetError):
        contract_net(k4, Net((0, 1, 2), (3, 3, 3)))


def test_contract_preserves_cubic_and_shrinks():
    g = petersen_like_with_net()
    nets = find_nets(g)
    assert nets
    reduced, _ = contract_net(g, nets[0])
    assert reduced.n == g.n - 2
    assert reduced.is_cubic()


def petersen_like_with_net():
    # prism with one triangle expanded: take a random cubic graph with a net
    for seed in range(100):
        g = random_cubic(10, seed)
        if find_nets(g):
            return g
    raise AssertionError("no netted 10-vertex graph found")
