"""Acceptance suite: one test per shipped guarantee, each printing a
PASS/FAIL line (run with -s to watch them stream).

 1. every 2-connected cubic graph on 4..12 vertices has a Hamilton path and
    exact cover number 1 (labeled enumeration at n<=8, discovery-reduced at
    n in {10,12}; the reduced stream covers every isomorphism class);
 2. the search meets the ceil(n/10) bound on all of those with n >= 10 and
    on 1,000 random 2-connected cubic graphs with n in {20,50,100,200},
    zero violations, counterexample records on any failure;
 3. the K4-minus-an-edge blowups of K4, K3,3 and Petersen pin the lower
    bound n(H)/14 exactly and no searched cover ever beats it;
 4. rings of Petersen-minus-an-edge gadgets: ring(2) is traceable, ring(3)
    is covered by two paths;
 5. discharging: the per-path weight identity holds on every cover
    (including mid-search snapshots); audit-passing covers satisfy
    w(P) <= |V(P)| per path and total weight 10*|cover| <= n;
 6. the subset DP agrees with naive all-covers enumeration on every cubic
    graph with n <= 8 and with the search+fallback on 100 random n <= 22;
 7. the graph6 codec round-trips 10,000 corpus lines bit-exact and matches
    the independent reference decoder.
"""

import json
import math
from pathlib import Path

import numpy as np
import pytest

from oracles import brute_min_path_cover
from pathcover.audit import audit_structure
from pathcover.classify import classify
from pathcover.cover import make_cover, validate_cover
from pathcover.discharge import check_weight_bound, transfer_weights
from pathcover.enumeration import enumerate_cubic
from pathcover.exact import ham_path_exists, min_path_cover_exact, parity_lower_bound
from pathcover.generators import (
    k4minus_blowup,
    petersen,
    petersen_ring,
    random_cubic,
)
from pathcover.graph import build_graph, is_biconnected
from pathcover.graph6 import decode_graph6, encode_graph6
from pathcover.optimizer import ImproveOptions, improve

ARTIFACTS = Path(__file__).parent / "_artifacts"

K4 = build_graph(4, [(i, j) for i in range(4) for j in range(i + 1, 4)], True)
K33 = build_graph(6, [(i, j) for i in range(3) for j in range(3, 6)], True)


def report(criterion: int, passed: bool, detail: str) -> None:
    print(f"ACCEPTANCE {criterion}: {'PASS' if passed else 'FAIL'} - {detail}")


def dump_counterexample(tag: str, g, cover, extra: dict) -> Path:
    ARTIFACTS.mkdir(exist_ok=True)
    path = ARTIFACTS / f"{tag}.json"
    record = {
        "graph6": encode_graph6(g),
        "n": g.n,
        "cover": [list(p) for p in cover.paths] if cover else None,
    }
    record.update(extra)
    path.write_text(json.dumps(record, indent=1))
    return path


@pytest.fixture(scope="module")
def enum_corpus():
    corpus = {}
    for n in (4, 6, 8):
        corpus[n] = [g for g in enumerate_cubic(n) if is_biconnected(g)]
    for n in (10, 12):
        corpus[n] = list(enumerate_cubic(n, mode="reduced", biconnected_only=True))
    return corpus


@pytest.fixture(scope="module")
def random_corpus():
    graphs = []
    per_size = 250
    for n in (20, 50, 100, 200):
        for i in range(per_size):
            graphs.append(random_cubic(n, seed=n * 100_000 + i))
    return graphs


@pytest.fixture(scope="module")
def search_covers(enum_corpus, random_corpus):
    """improve() results over criterion-2's whole corpus, bound-checked."""
    results = []
    violations = []
    for g in enum_corpus[10] + enum_corpus[12] + random_corpus:
        out = improve(g)
        assert validate_cover(out.cover).ok
        bound = math.ceil(g.n / 10)
        if len(out.cover.paths) > bound:
            p = dump_counterexample(
                f"bound-violation-n{g.n}-{len(violations)}",
                g,
                out.cover,
                {"paths": len(out.cover.paths), "bound": bound,
                 "audit": audit_structure(out.cover).to_json()},
            )
            violations.append(p)
        results.append((g, out.cover))
    return results, violations


def test_criterion_1_small_order_hamiltonicity(enum_corpus):
    checked = 0
    for n in (4, 6, 8, 10, 12):
        for g in enum_corpus[n]:
            found, _ = ham_path_exists(g)
            assert found, f"n={n}: graph without hamilton path {encode_graph6(g)}"
            assert min_path_cover_exact(g).count == 1, encode_graph6(g)
            checked += 1
    report(1, True, f"hamilton path + exact cover 1 on {checked} 2-connected cubic graphs, n=4..12")


def test_criterion_2_main_bound(search_covers):
    results, violations = search_covers
    passed = not violations
    report(
        2,
        passed,
        f"search met ceil(n/10) on {len(results)} graphs "
        f"({len(violations)} violations{'' if passed else ': see ' + str(violations[0])})",
    )
    assert passed


def test_criterion_3_lower_bound_family():
    for base, base_name in ((K4, "K4"), (K33, "K33"), (petersen(), "Petersen")):
        h, gmap = k4minus_blowup(base)
        lower = parity_lower_bound(h, gmap)
        assert lower == base.n // 2 == h.n // 14
        out = improve(h)
        assert validate_cover(out.cover).ok
        assert len(out.cover.paths) >= lower, base_name
    report(3, True, "parity bound n(H)/14 exact on K4/K33/Petersen blowups; search never beat it")


def test_criterion_4_ring_remark():
    found, _ = ham_path_exists(petersen_ring(2))
    assert found
    out = improve(petersen_ring(3))
    assert len(out.cover.paths) <= 2
    report(4, True, f"ring(2) traceable; ring(3) covered by {len(out.cover.paths)} paths")


def test_criterion_5_discharging(search_covers):
    results, _ = search_covers
    audited = 0
    for g, cover in results:
        classes = classify(cover)
        ledger = transfer_weights(cover, classes)  # raises on identity breach
        rep = audit_structure(cover, classes)
        if rep.passed:
            audited += 1
            checks = check_weight_bound(cover, ledger)
            assert all(c.passed for c in checks), encode_graph6(g)
            assert ledger.conserved()
            assert ledger.total == 10 * len(cover.paths)
            if g.n >= 10:
                assert ledger.total <= g.n
    # identity on intermediate covers too: trace a deterministic subsample
    sampled = 0
    for seed, n in [(s, n) for n in (12, 20, 30) for s in range(8)]:
        g = random_cubic(n, seed)
        out = improve(g, ImproveOptions(trace_level=2))
        host = out.trace.search_host
        for snap in out.trace.snapshots:
            cover = make_cover(host, list(snap))
            transfer_weights(cover, classify(cover))
            sampled += 1
    report(
        5,
        True,
        f"weight identity exact on {len(results)} final + {sampled} intermediate covers; "
        f"{audited} audit-passing covers all satisfied w(P)<=|V(P)| and total 10*|cover|<=n",
    )


def test_criterion_6_oracle_equivalence(enum_corpus):
    checked = 0
    for n in (4, 6, 8):
        for g in enumerate_cubic(n):  # all labeled graphs, disconnected included
            assert min_path_cover_exact(g).count == brute_min_path_cover(g)
            checked += 1
    agree = 0
    sizes = [10, 12, 14, 16, 18, 20, 22]
    for i in range(100):
        n = sizes[i % len(sizes)]
        g = random_cubic(n, seed=777_000 + i)
        out = improve(g)
        assert len(out.cover.paths) == min_path_cover_exact(g).count
        agree += 1
    report(6, True, f"DP == naive enumeration on {checked} graphs (n<=8); search+fallback == DP on {agree} random n<=22")


def test_criterion_7_codec(enum_corpus):
    import networkx as nx

    ref = nx.from_graph6_bytes(b"C~")
    k4 = decode_graph6("C~")
    assert set(ref.edges()) == set(k4.edges()) and k4.n == 4

    corpus = []
    for g in enum_corpus[8][:4000]:
        corpus.append(encode_graph6(g))
    rng = np.random.default_rng(20260811)
    while len(corpus) < 9900:
        n = int(rng.integers(1, 45))
        edges = [
            (i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < 0.25
        ]
        corpus.append(encode_graph6(build_graph(n, edges)))
    corpus.append(encode_graph6(petersen()))
    corpus.append(encode_graph6(petersen_ring(2)))
    corpus.append(encode_graph6(k4minus_blowup(petersen())[0]))
    while len(corpus) < 10_000:
        corpus.append(encode_graph6(random_cubic(20, int(rng.integers(10**6)))))
    assert len(corpus) == 10_000

    for i, line in enumerate(corpus):
        g = decode_graph6(line)
        assert encode_graph6(g) == line
        if i % 10 == 0:
            nxg = nx.from_graph6_bytes(line.encode())
            assert set(map(tuple, map(sorted, nxg.edges()))) == set(g.edges())
            assert nxg.number_of_nodes() == g.n
    report(7, True, "10,000 graph6 lines round-tripped bit-exact; 1,000 cross-checked against the reference decoder")
