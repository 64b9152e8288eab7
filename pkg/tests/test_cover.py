import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import brute_spanning_cycle_of_subset
from pathcover.cover import (
    PathCover,
    expand_cover,
    is_cyclic_path,
    make_cover,
    spanning_cycle,
    validate_cover,
)
from pathcover.errors import InvalidCoverError
from pathcover.generators import random_cubic
from pathcover.graph import contract_net, find_nets
from pathcover.optimizer import initial_cover


def test_validate_ok(k4):
    assert validate_cover(make_cover(k4, [(0, 1, 2, 3)])).ok


def test_validate_repeated_vertex(k4):
    rep = validate_cover(make_cover(k4, [(0, 1, 2), (2, 3)]))
    assert not rep.ok and "repeated" in rep.problem


def test_validate_uncovered(k4):
    rep = validate_cover(make_cover(k4, [(0, 1, 2)]))
    assert not rep.ok and "uncovered" in rep.problem


def test_validate_non_edge(k33):
    rep = validate_cover(make_cover(k33, [(0, 1, 2), (3, 4, 5)]))
    assert not rep.ok and "missing edge" in rep.problem


def test_cyclic_k4_hamilton_path(k4):
    assert is_cyclic_path(k4, (0, 1, 2, 3))


def test_cyclic_two_path_never(k4):
    assert not is_cyclic_path(k4, (0, 1))


def test_cyclic_k33_three_path(k33):
    assert not is_cyclic_path(k33, (0, 3, 1))


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6), st.sampled_from([8, 10, 12]))
def test_cyclic_matches_bruteforce(seed, n):
    g = random_cubic(n, seed)
    cover = initial_cover(g)
    for p in cover.paths:
        assert is_cyclic_path(g, p) == brute_spanning_cycle_of_subset(g, p)


def test_spanning_cycle_is_a_cycle(k4):
    cyc = spanning_cycle(k4, (0, 2, 1, 3))
    assert cyc is not None and len(cyc) == 4
    for a, b in zip(cyc, cyc[1:] + cyc[:1]):
        assert k4.has_edge(a, b)


def test_expand_hamilton_path_through_contraction(prism):
    net = find_nets(prism)[0]
    reduced, rec = contract_net(prism, net)
    # hamilton path of K4 through the contracted vertex (id 0)
    cover = make_cover(reduced, [(1, 0, 2, 3)])
    out = expand_cover(cover, rec)
    assert out.host is prism
    assert len(out.paths) == 1 and len(out.paths[0]) == 6
    assert validate_cover(out).ok


def test_expand_singleton_becomes_triangle(prism):
    net = find_nets(prism)[0]
    reduced, rec = contract_net(prism, net)
    cover = make_cover(reduced, [(0,), (1, 2, 3)])
    out = expand_cover(cover, rec)
    assert len(out.paths) == 2
    assert tuple(sorted(out.paths[0])) == net.triangle
    assert validate_cover(out).ok


def test_expand_endpoint_appends_triangle(prism):
    net = find_nets(prism)[0]
    reduced, rec = contract_net(prism, net)
    # every way the contracted vertex can sit at an end of a path
    for paths in ([(0, 1, 2, 3)], [(0, 1), (2, 3)], [(2, 1, 0), (3,)], [(3, 2, 0), (1,)]):
        cover = make_cover(reduced, [tuple(p) for p in paths])
        if not validate_cover(cover).ok:
            continue
        out = expand_cover(cover, rec)
        assert len(out.paths) == len(paths)
        assert validate_cover(out).ok


def test_expand_rejects_invalid_cover(prism):
    net = find_nets(prism)[0]
    reduced, rec = contract_net(prism, net)
    with pytest.raises(InvalidCoverError):
        expand_cover(make_cover(reduced, [(0, 1)]), rec)


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 3000))
def test_expand_preserves_count_on_random_netted_graphs(seed):
    g = random_cubic(12, seed)
    nets = find_nets(g)
    if not nets:
        return
    reduced, rec = contract_net(g, nets[0])
    cover = initial_cover(reduced)
    out = expand_cover(cover, rec)
    assert len(out.paths) == len(cover.paths)
    assert validate_cover(out).ok


def test_json_roundtrip(k4):
    cover = make_cover(k4, [(0, 1), (2, 3)])
    back = PathCover.from_json(cover.to_json())
    assert back.paths == cover.paths
    assert back.host.adj == k4.adj
