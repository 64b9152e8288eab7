"""Weight accounting over path covers.

Each path holds 10 units. Conceptually each endpoint carries 5 and pushes 2
along each of its two off-path edges, so a path of order >= 2 retains a base
of 2. The transfer rule: a weighty or heavy vertex receives 2 from the
adjacent endpoint; a pseudo-endpoint passes 1 on to its light neighbor. With
the disjoint role partition this gives the per-path closed form

    w(P) = 2 + 2*s1(P) + s2(P) - n_o(P)

where s1 counts weighty+heavy, s2 light, and n_o pseudo-endpoints on P. The
simulation below walks actual graph edges and witnesses independently of the
role counting, so the two must agree on every valid cover of a cubic host;
a disagreement is a classification bug (IdentityMismatchError).

A send is "delivered" when the receiving side really is weighty/heavy; on
covers that pass the structural audit every one of the 4 sends per path is
delivered, and only then does the global total equal 10 * |cover|.
"""

from __future__ import annotations

from dataclasses import dataclass

from .classify import (
    ENDPOINT,
    HEAVY,
    LIGHT,
    NEUTRAL,
    PSEUDO_ENDPOINT,
    WEIGHTY,
    VertexClass,
)
from .cover import PathCover, require_valid
from .errors import IdentityMismatchError, NotCubicError


@dataclass
class PathWeights:
    s1: int = 0          # weighty + heavy
    s2: int = 0          # light
    s3: int = 0          # neutral (pseudo-endpoints included)
    n_o: int = 0         # pseudo-endpoints
    n_h: int = 0         # heavy pairs
    n_q: int = 0         # neutral pairs
    n_r: int = 0         # free neutral vertices
    heavy_segments: int = 0
    w: int = 0           # closed form 2 + 2 s1 + s2 - n_o
    w_sim: int = 0       # edge-walk simulation
    order: int = 0
    endpoints: int = 0

    def to_json(self) -> dict:
        return self.__dict__.copy()


@dataclass
class WeightLedger:
    per_path: list[PathWeights]
    # vertex -> list of (other_vertex, amount); positive received, negative sent
    transfers: dict[int, list[tuple[int, int]]]
    delivered_sends: int
    expected_sends: int
    identity_ok: bool = True

    @property
    def total(self) -> int:
        return sum(pw.w for pw in self.per_path)

    def conserved(self) -> bool:
        """True when all four sends of every path were delivered, which is
        exactly when total == 10 * |cover|."""
        return self.delivered_sends == 4 * len(self.per_path)

    def to_json(self) -> dict:
        return {
            "per_path": [pw.to_json() for pw in self.per_path],
            "transfers": {str(v): t for v, t in self.transfers.items()},
            "total": self.total,
            "delivered_sends": self.delivered_sends,
            "expected_sends": self.expected_sends,
            "conserved": self.conserved(),
        }


NEUTRALISH = (NEUTRAL, PSEUDO_ENDPOINT)
HEAVYISH = (WEIGHTY, HEAVY)


def segment_decomposition(
    path: tuple[int, ...], classes: VertexClass
) -> tuple[list[tuple[int, int]], list[tuple[int, int]], int, int, int]:
    """Maximal heavy and neutral segments over a path's interior vertices.

    Returns (heavy_segments, neutral_segments, n_h, n_q, n_r) where segments
    are (start_index, end_index) pairs into the path. A heavy segment runs
    between weighty/heavy vertices with no neutral vertex inside (light is
    transparent); a heavy pair is a consecutive pair of weighty/heavy
    vertices inside one segment. Neutral segments mirror this between the
    non-free neutrals; a segment holding s neutrals has s-1 neutral pairs.
    A neutral vertex is free when one side of it (toward either endpoint)
    carries no weighty/heavy vertex. Pseudo-endpoints count as neutral."""
    m = len(path)
    interior = list(range(1, m - 1))
    kinds = {}
    for i in interior:
        r = classes.roles[path[i]]
        if r in HEAVYISH:
            kinds[i] = "h"
        elif r in NEUTRALISH:
            kinds[i] = "n"
        else:
            kinds[i] = "-"  # light: transparent for segments
    hpos = [i for i in interior if kinds[i] == "h"]
    if not hpos:
        n_r = sum(1 for i in interior if kinds[i] == "n")
        return [], [], 0, 0, n_r
    first_h, last_h = hpos[0], hpos[-1]
    n_r = sum(1 for i in interior if kinds[i] == "n" and (i < first_h or i > last_h))

    heavy_segments: list[tuple[int, int]] = []
    n_h = 0
    run: list[int] = []
    for i in interior + [None]:  # sentinel flushes the last run
        if i is not None and kinds[i] != "n":
            run.append(i)
            continue
        hs = [j for j in run if kinds[j] == "h"]
        if hs:
            heavy_segments.append((hs[0], hs[-1]))
            n_h += len(hs) - 1
        run = []

    neutral_segments: list[tuple[int, int]] = []
    n_q = 0
    run = []
    for i in [j for j in interior if first_h < j < last_h] + [None]:
        if i is not None and kinds[i] != "h":
            run.append(i)
            continue
        ns = [j for j in run if kinds[j] == "n"]
        if ns:
            neutral_segments.append((ns[0], ns[-1]))
            n_q += len(ns) - 1
        run = []
    return heavy_segments, neutral_segments, n_h, n_q, n_r


def transfer_weights(cover: PathCover, classes: VertexClass) -> WeightLedger:
    """Run the edge-by-edge transfer simulation, fill the ledger, and verify
    the closed form per path. Host must be cubic."""
    require_valid(cover)
    g = cover.host
    if not g.is_cubic():
        raise NotCubicError("weight transfers are defined on cubic hosts")
    owner = cover.path_of()
    roles = classes.roles

    path_edge: set[tuple[int, int]] = set()
    for p in cover.paths:
        for a, b in zip(p, p[1:]):
            path_edge.add((a, b) if a < b else (b, a))

    sim = [2] * len(cover.paths)  # base retained per path after its 4 sends
    transfers: dict[int, list[tuple[int, int]]] = {}
    delivered = 0
    expected = 0

    def log(v: int, other: int, amount: int) -> None:
        transfers.setdefault(v, []).append((other, amount))

    for pi, p in enumerate(cover.paths):
        ends = (p[0],) if len(p) == 1 else (p[0], p[-1])
        for x in ends:
            for w in g.adj[x]:
                key = (x, w) if x < w else (w, x)
                if key in path_edge:
                    continue
                expected += 1
                if roles[w] in HEAVYISH:
                    sim[owner[w]] += 2
                    log(x, w, -2)
                    log(w, x, 2)
                    delivered += 1
    for u in sorted(classes.pe_candidates):
        if roles[u] != PSEUDO_ENDPOINT:
            continue
        v = classes.pe_target[u]
        sim[owner[u]] -= 1
        sim[owner[v]] += 1
        log(u, v, -1)
        log(v, u, 1)

    per_path: list[PathWeights] = []
    for pi, p in enumerate(cover.paths):
        pw = PathWeights(order=len(p), endpoints=1 if len(p) == 1 else 2)
        for v in p:
            r = roles[v]
            if r in HEAVYISH:
                pw.s1 += 1
            elif r == LIGHT:
                pw.s2 += 1
            elif r in NEUTRALISH:
                pw.s3 += 1
                if r == PSEUDO_ENDPOINT:
                    pw.n_o += 1
        segs = segment_decomposition(p, classes)
        pw.heavy_segments = len(segs[0])
        pw.n_h, pw.n_q, pw.n_r = segs[2], segs[3], segs[4]
        pw.w = 2 + 2 * pw.s1 + pw.s2 - pw.n_o
        pw.w_sim = sim[pi]
        per_path.append(pw)
        if pw.w != pw.w_sim:
            raise IdentityMismatchError(
                f"path {pi}: closed form {pw.w} != simulation {pw.w_sim} "
                f"(s1={pw.s1} s2={pw.s2} n_o={pw.n_o})"
            )
    return WeightLedger(per_path, transfers, delivered, expected)


@dataclass(frozen=True)
class BoundCheck:
    path_index: int
    order: int
    weight: int
    passed: bool
    witness: tuple[int, int, int, int] | None  # (n_h, n_o, n_q, n_r) when failed


def check_weight_bound(cover: PathCover, ledger: WeightLedger) -> list[BoundCheck]:
    """Per-path w(P) <= |V(P)| verdicts. A failing path carries its
    (n_h, n_o, n_q, n_r) bookkeeping witness: the counting argument shows a
    failure forces n_h >= n_o + n_q + n_r."""
    out = []
    for i, pw in enumerate(ledger.per_path):
        ok = pw.w <= pw.order
        witness = None if ok else (pw.n_h, pw.n_o, pw.n_q, pw.n_r)
        out.append(BoundCheck(i, pw.order, pw.w, ok, witness))
    return out
