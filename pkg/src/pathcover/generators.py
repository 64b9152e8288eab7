"""Graph families: Petersen, the K4-minus-an-edge edge blowup, rings of
Petersen-minus-an-edge gadgets, and random 2-connected cubic instances."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import (
    KTooSmallError,
    NotBiconnectedError,
    NotCubicError,
    OddOrderError,
    RetryExhaustedError,
)
from .graph import Graph, build_graph, is_biconnected

PETERSEN_EDGES = (
    [(i, (i + 1) % 5) for i in range(5)]
    + [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    + [(i, 5 + i) for i in range(5)]
)


def petersen() -> Graph:
    """Outer 5-cycle 0..4, inner pentagram 5..9, spokes i - 5+i."""
    return build_graph(10, PETERSEN_EDGES, require_cubic=True)


@dataclass(frozen=True)
class GadgetMap:
    """Per base edge: the four gadget vertices (w0..w3, with w0 and w3 the
    degree-2 ends before attachment) and the two attachment edges."""

    base_n: int
    entries: dict[tuple[int, int], tuple[tuple[int, int, int, int], tuple]] = field(
        default_factory=dict
    )

    def items(self):
        return self.entries.items()

    def __getitem__(self, edge):
        return self.entries[edge]


def k4minus_blowup(g: Graph) -> tuple[Graph, GadgetMap]:
    """Replace every edge uv of a 2-connected cubic g with a K4-minus-an-edge
    gadget, attaching u and v to the gadget's two degree-2 vertices.

    Original vertices keep their ids; gadget vertices are appended four at a
    time in lexicographic edge order, so the construction is reproducible.
    n(H) = 7 n(g)."""
    if not g.is_cubic():
        raise NotCubicError("blowup input must be cubic")
    if not is_biconnected(g):
        raise NotBiconnectedError("blowup input must be 2-connected")
    edges = []
    entries = {}
    nxt = g.n
    for u, v in g.edges():
        w0, w1, w2, w3 = nxt, nxt + 1, nxt + 2, nxt + 3
        nxt += 4
        edges += [(w0, w1), (w0, w2), (w1, w2), (w1, w3), (w2, w3)]
        attach = ((u, w0), (v, w3))
        edges += list(attach)
        entries[(u, v)] = ((w0, w1, w2, w3), attach)
    h = build_graph(nxt, edges, require_cubic=True)
    return h, GadgetMap(g.n, entries)


def petersen_ring(k: int) -> Graph:
    """Cycle u_1 v_1 u_2 v_2 ... u_k v_k with every u_i v_i edge replaced by a
    copy of the Petersen graph minus one spoke, whose two degree-2 vertices
    play u_i and v_i. n = 10k, cubic, 2-connected for k >= 2."""
    if k < 2:
        raise KTooSmallError("k=1 would double an edge; need k >= 2")
    edges = []
    for i in range(k):
        base = 10 * i
        for a, b in PETERSEN_EDGES:
            if (a, b) == (0, 5):
                continue  # the deleted spoke: u_i = base+0, v_i = base+5
            edges.append((base + a, base + b))
        edges.append((base + 5, (10 * ((i + 1) % k))))
    return build_graph(10 * k, edges, require_cubic=True)


def random_cubic(n: int, seed: int, retry_cap: int = 10_000) -> Graph:
    """Uniform-flavored random cubic graph by the pairing model, rejecting
    loops, multi-edges, and non-2-connected outcomes. Deterministic per
    (n, seed)."""
    if n % 2 != 0 or n < 4:
        raise OddOrderError(f"need even n >= 4, got {n}")
    rng = np.random.Generator(np.random.PCG64(seed))
    stubs = np.repeat(np.arange(n), 3)
    for _ in range(retry_cap):
        perm = rng.permutation(stubs)
        pairs = perm.reshape(-1, 2)
        edges = set()
        ok = True
        for a, b in pairs:
            u, v = int(a), int(b)
            if u == v:
                ok = False
                break
            key = (u, v) if u < v else (v, u)
            if key in edges:
                ok = False
                break
            edges.add(key)
        if not ok:
            continue
        g = build_graph(n, sorted(edges), require_cubic=True)
        if is_biconnected(g):
            return g
    raise RetryExhaustedError(f"no simple 2-connected pairing in {retry_cap} tries")
