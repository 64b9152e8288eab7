"""Local-search improvement of path covers under the lexicographic objective.

The move catalog mirrors the exchange arguments behind the optimality
criteria: merging adjacent endpoints, absorbing 1-paths at interior vertices,
rotating cyclic paths out through an off-path edge, rerouting an endpoint
along a chord, and splitting one path to recombine with another's endpoint.
First-improvement descent over that catalog, plus a rotation-chain merge
search (chords move an endpoint around until it faces another path's
endpoint), randomized kicks, restarts, and an exact fallback at small n.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .cover import PathCover, expand_cover, make_cover, require_valid, spanning_cycle
from .errors import SearchTimeout
from .exact import min_path_cover_exact
from .graph import Graph, contract_net, find_nets, is_biconnected
from .objective import ObjectiveVector, objective_vector

MERGE_ENDPOINTS = "MergeEndpoints"
ABSORB_AT_INTERIOR = "AbsorbAtInterior"
ROTATE_CYCLIC = "RotateCyclic"
REROUTE_ENDPOINT = "RerouteEndpoint"
SPLIT_RECOMBINE = "SplitRecombine"

_KIND_ORDER = {
    MERGE_ENDPOINTS: 0,
    ABSORB_AT_INTERIOR: 1,
    ROTATE_CYCLIC: 2,
    REROUTE_ENDPOINT: 3,
    SPLIT_RECOMBINE: 4,
}

Paths = list[tuple[int, ...]]


@dataclass(frozen=True)
class Move:
    kind: str
    data: tuple

    def sort_key(self):
        return (_KIND_ORDER[self.kind], self.data)


@dataclass
class ImproveOptions:
    max_restarts: int = 20
    kick_count: int = 3
    exact_cap: int = 22
    seed: int = 0
    trace_level: int = 0
    rotation_cap: int = 256


@dataclass
class Trace:
    level: int = 0
    events: list = field(default_factory=list)
    # intermediate covers, as path tuples over search_host (the net-reduced
    # graph the descent actually ran on)
    snapshots: list = field(default_factory=list)
    search_host: Graph | None = None
    moves_applied: int = 0
    restarts_used: int = 0
    kicks_used: int = 0
    used_exact: bool = False
    net_contractions: int = 0

    def note(self, event: str, **detail) -> None:
        if self.level >= 1:
            self.events.append((event, detail))

    def snap(self, paths: Paths) -> None:
        if self.level >= 2:
            self.snapshots.append(tuple(paths))


@dataclass
class ImproveResult:
    cover: PathCover
    trace: Trace
    bound_exceeded: bool


class _Ctx:
    """Shared search state: the host plus a budgeted spanning-cycle cache.

    Cyclic checks answer from the cache so the objective is one fixed
    deterministic function throughout a run (descent termination relies on
    that). A check that exhausts its budget is scored non-cyclic; covers the
    search emits remain valid either way."""

    CYCLE_BUDGET = 50_000
    # above this length, only the endpoint-adjacency fast path decides
    # cyclicness inside the search (the exact check would leave the jit lane)
    CYCLE_EXACT_LEN = 62

    def __init__(self, g: Graph):
        self.g = g
        self.cyclic: dict[frozenset, bool] = {}
        self.cycles: dict[frozenset, tuple[int, ...] | None] = {}
        self.cycle_timeouts = 0

    def spanning_cycle(self, p: tuple[int, ...]) -> tuple[int, ...] | None:
        key = frozenset(p)
        if key not in self.cycles:
            if len(p) > self.CYCLE_EXACT_LEN and not self.g.has_edge(p[0], p[-1]):
                cyc = None
            else:
                try:
                    cyc = spanning_cycle(self.g, p, self.CYCLE_BUDGET)
                except SearchTimeout:
                    cyc = None
                    self.cycle_timeouts += 1
            self.cycles[key] = cyc
            self.cyclic[key] = cyc is not None
        return self.cycles[key]

    def is_cyclic(self, p: tuple[int, ...]) -> bool:
        self.spanning_cycle(p)
        return self.cyclic[frozenset(p)]

    def objective(self, paths: Paths) -> ObjectiveVector:
        for p in paths:
            self.spanning_cycle(p)
        return objective_vector(make_cover(self.g, paths), _cyclic_cache=self.cyclic)


def initial_cover(g: Graph) -> PathCover:
    """Greedy path peeling: grow a path from the smallest uncovered vertex,
    always stepping to the smallest uncovered neighbor, then extend the tail
    backwards the same way. Deterministic."""
    paths = _peel(g)
    cover = make_cover(g, paths)
    require_valid(cover)
    return cover


def _peel(g: Graph, rng=None) -> Paths:
    uncovered = set(range(g.n))
    paths: Paths = []
    while uncovered:
        if rng is None:
            start = min(uncovered)
        else:
            start = int(rng.choice(sorted(uncovered)))
        path = [start]
        uncovered.discard(start)
        for grow_at_end in (True, False):
            while True:
                tip = path[-1] if grow_at_end else path[0]
                cands = [w for w in g.adj[tip] if w in uncovered]
                if not cands:
                    break
                nxt = cands[0] if rng is None else int(rng.choice(cands))
                uncovered.discard(nxt)
                if grow_at_end:
                    path.append(nxt)
                else:
                    path.insert(0, nxt)
        paths.append(tuple(path))
    return paths


def _oriented_ending_at(p: tuple[int, ...], v: int) -> tuple[int, ...]:
    return p if p[-1] == v else tuple(reversed(p))


def _oriented_starting_at(p: tuple[int, ...], v: int) -> tuple[int, ...]:
    return p if p[0] == v else tuple(reversed(p))


def enumerate_moves(cover: PathCover) -> list[Move]:
    """All applicable moves over a valid cover, deterministically ordered."""
    ctx = _Ctx(cover.host)
    return _enumerate_moves(ctx, list(cover.paths))


def _enumerate_moves(ctx: _Ctx, paths: Paths) -> list[Move]:
    g = ctx.g
    owner: dict[int, int] = {}
    pos: dict[int, int] = {}
    for i, p in enumerate(paths):
        for j, v in enumerate(p):
            owner[v] = i
            pos[v] = j
    ends: list[tuple[int, ...]] = [
        (p[0],) if len(p) == 1 else (p[0], p[-1]) for p in paths
    ]
    moves: list[Move] = []

    # MergeEndpoints: endpoints of different paths joined by an edge
    for pi, p in enumerate(paths):
        for x in ends[pi]:
            for w in g.adj[x]:
                qi = owner[w]
                if qi <= pi:
                    continue
                if w in ends[qi]:
                    moves.append(Move(MERGE_ENDPOINTS, (pi, qi, x, w)))

    # AbsorbAtInterior: a 1-path joins an interior vertex, splitting its host
    for pi, p in enumerate(paths):
        if len(p) != 1:
            continue
        v = p[0]
        for w in g.adj[v]:
            qi = owner[w]
            if qi == pi:
                continue
            j = pos[w]
            if 1 <= j <= len(paths[qi]) - 2:
                moves.append(Move(ABSORB_AT_INTERIOR, (pi, qi, j, 0)))
                moves.append(Move(ABSORB_AT_INTERIOR, (pi, qi, j, 1)))

    # RotateCyclic: open a cyclic path at a vertex with an off-path edge and
    # attach the freed endpoint to another path
    for pi, p in enumerate(paths):
        if len(p) < 3 or not ctx.is_cyclic(p):
            continue
        pset = set(p)
        for v in sorted(pset):
            for u in g.adj[v]:
                if u in pset:
                    continue
                qi = owner[u]
                j = pos[u]
                if u in ends[qi]:
                    moves.append(Move(ROTATE_CYCLIC, (pi, qi, v, u, -1)))
                elif 1 <= j <= len(paths[qi]) - 2:
                    moves.append(Move(ROTATE_CYCLIC, (pi, qi, v, u, 0)))
                    moves.append(Move(ROTATE_CYCLIC, (pi, qi, v, u, 1)))

    # RerouteEndpoint: flip the prefix before an endpoint chord
    for pi, p in enumerate(paths):
        if len(p) < 4:
            continue
        for side, oriented in enumerate((p, tuple(reversed(p)))):
            ipos = {v: t for t, v in enumerate(oriented)}
            x = oriented[0]
            for w in g.adj[x]:
                t = ipos.get(w)
                if t is not None and 2 <= t <= len(p) - 2:
                    moves.append(Move(REROUTE_ENDPOINT, (pi, side, t)))

    # SplitRecombine: an endpoint of one path attaches to the interior of
    # another, which splits there; one side joins, the other becomes a path
    for qi, q in enumerate(paths):
        if len(q) < 2:
            continue
        for x in ends[qi]:
            for w in g.adj[x]:
                pi = owner[w]
                if pi == qi:
                    continue
                j = pos[w]
                if 1 <= j <= len(paths[pi]) - 2:
                    moves.append(Move(SPLIT_RECOMBINE, (qi, x, pi, j, 0)))
                    moves.append(Move(SPLIT_RECOMBINE, (qi, x, pi, j, 1)))

    moves.sort(key=Move.sort_key)
    return moves


def apply_move(ctx: _Ctx, paths: Paths, move: Move) -> Paths:
    """Apply a move, producing a new path list (a valid cover by construction)."""
    k = move.kind
    d = move.data
    out = list(paths)
    if k == MERGE_ENDPOINTS:
        pi, qi, x, w = d
        merged = _oriented_ending_at(paths[pi], x) + _oriented_starting_at(paths[qi], w)
        out[pi] = merged
        del out[qi]
        return out
    if k == ABSORB_AT_INTERIOR:
        pi, qi, j, side = d
        v = paths[pi][0]
        q = paths[qi]
        if side == 0:
            a, b = q[: j + 1] + (v,), q[j + 1:]
        else:
            a, b = (v,) + q[j:], q[:j]
        out[min(pi, qi)] = a
        out[max(pi, qi)] = b
        return out
    if k == ROTATE_CYCLIC:
        pi, qi, v, u, side = d
        cyc = ctx.spanning_cycle(paths[pi])
        idx = cyc.index(v)
        rot = cyc[idx + 1:] + cyc[: idx + 1]  # ends at v
        q = paths[qi]
        if side == -1:
            merged = rot + _oriented_starting_at(q, u)
            out[pi] = merged
            del out[qi]
            return out
        j = q.index(u)
        if side == 0:
            a, b = q[: j + 1] + tuple(reversed(rot)), q[j + 1:]
        else:
            a, b = rot + q[j:], q[:j]
        out[min(pi, qi)] = a
        out[max(pi, qi)] = b
        return out
    if k == REROUTE_ENDPOINT:
        pi, side, t = d
        p = paths[pi] if side == 0 else tuple(reversed(paths[pi]))
        out[pi] = tuple(reversed(p[:t])) + p[t:]
        return out
    if k == SPLIT_RECOMBINE:
        qi, x, pi, j, side = d
        q = _oriented_ending_at(paths[qi], x)
        p = paths[pi]
        if side == 0:
            a, b = q + p[j:], p[:j]
        else:
            a, b = q + tuple(reversed(p[: j + 1])), p[j + 1:]
        out[min(pi, qi)] = a
        out[max(pi, qi)] = b
        return out
    raise ValueError(f"unknown move kind {k}")


def _descend(ctx: _Ctx, paths: Paths, trace: Trace) -> Paths:
    """First-improvement descent until no move lowers the objective."""
    obj = ctx.objective(paths)
    while True:
        improved = False
        for move in _enumerate_moves(ctx, paths):
            cand = apply_move(ctx, paths, move)
            # merges strictly lower c1: accept without a full evaluation
            if len(cand) < len(paths):
                paths = cand
                obj = ctx.objective(paths)
                trace.moves_applied += 1
                trace.note("move", kind=move.kind, obj=obj.as_tuple())
                trace.snap(paths)
                improved = True
                break
            cobj = ctx.objective(cand)
            if cobj < obj:
                paths, obj = cand, cobj
                trace.moves_applied += 1
                trace.note("move", kind=move.kind, obj=obj.as_tuple())
                trace.snap(paths)
                improved = True
                break
        if not improved:
            return paths


def _path_variants(ctx: _Ctx, p: tuple[int, ...], cap: int) -> list[tuple[int, ...]]:
    """All reroutes of p reachable by chord flips at either end (and, for
    cyclic paths, by reopening the spanning cycle anywhere), BFS order,
    capped."""
    g = ctx.g
    starts = [tuple(p)]
    if len(p) > 1:
        starts.append(tuple(reversed(p)))
    if len(p) >= 3:
        cyc = ctx.spanning_cycle(p)
        if cyc is not None:
            for i in range(len(cyc)):
                rot = cyc[i + 1:] + cyc[: i + 1]
                starts.append(rot)
                starts.append(tuple(reversed(rot)))
    seen: set[tuple[int, ...]] = set()
    queue: list[tuple[int, ...]] = []
    for s in starts:
        if s not in seen:
            seen.add(s)
            queue.append(s)
    head = 0
    while head < len(queue) and len(seen) <= cap:
        cur = queue[head]
        head += 1
        for side in (0, 1):
            o = cur if side == 0 else tuple(reversed(cur))
            ipos = {v: t for t, v in enumerate(o)}
            for w in g.adj[o[0]]:
                t = ipos.get(w)
                if t is None or t < 2 or t > len(o) - 2:
                    continue
                nxt = tuple(reversed(o[:t])) + o[t:]
                if nxt not in seen and len(seen) <= cap:
                    seen.add(nxt)
                    queue.append(nxt)
    return queue


def _rotation_merge_search(ctx: _Ctx, paths: Paths, cap: int, trace: Trace) -> Paths | None:
    """Look for two paths that merge after chord reroutes: first rotate one
    path against the others' current endpoints, then rotate both sides of a
    pair. A hit drops the path count by one."""
    if len(paths) <= 1:
        return None
    g = ctx.g
    variants: list[list[tuple[int, ...]]] = [
        _path_variants(ctx, p, cap) for p in paths
    ]
    # single-sided pass: variant end adjacent to another path's current end
    other_ends: dict[int, int] = {}
    for qi, q in enumerate(paths):
        for e in ((q[0],) if len(q) == 1 else (q[0], q[-1])):
            other_ends[e] = qi
    for pi in range(len(paths)):
        for var in variants[pi]:
            for tip in (var[0], var[-1]):
                for w in g.adj[tip]:
                    qi = other_ends.get(w)
                    if qi is None or qi == pi:
                        continue
                    merged = _oriented_ending_at(var, tip) + _oriented_starting_at(
                        paths[qi], w
                    )
                    out = [q for t, q in enumerate(paths) if t not in (pi, qi)]
                    out.append(merged)
                    trace.note("rotation-merge", path=pi, into=qi)
                    trace.snap(out)
                    return out
    # pairwise pass: ends of rerouted variants on both sides
    for pi in range(len(paths)):
        ends_p: dict[int, int] = {}
        for vi, var in enumerate(variants[pi]):
            for tip in (var[0], var[-1]):
                ends_p.setdefault(tip, vi)
        for qi in range(pi + 1, len(paths)):
            for vj, varq in enumerate(variants[qi]):
                for tip in (varq[0], varq[-1]):
                    for w in g.adj[tip]:
                        vi = ends_p.get(w)
                        if vi is None:
                            continue
                        varp = variants[pi][vi]
                        merged = _oriented_ending_at(varp, w) + _oriented_starting_at(
                            varq, tip
                        )
                        out = [q for t, q in enumerate(paths) if t not in (pi, qi)]
                        out.append(merged)
                        trace.note("rotation-merge-pair", a=pi, b=qi)
                        trace.snap(out)
                        return out
    return None


def _local_optimum(ctx: _Ctx, paths: Paths, opts: ImproveOptions, trace: Trace) -> Paths:
    while True:
        paths = _descend(ctx, paths, trace)
        merged = _rotation_merge_search(ctx, paths, opts.rotation_cap, trace)
        if merged is None:
            return paths
        paths = merged


def _random_kick(ctx: _Ctx, paths: Paths, rng, trace: Trace) -> Paths | None:
    """Path-count-preserving perturbation: prefer absorb moves that keep the
    whole vector, then a random endpoint reroute, then a random
    split-recombine (all keep c1; descent re-optimizes the rest)."""
    obj = ctx.objective(paths)
    moves = _enumerate_moves(ctx, paths)
    absorbs = [m for m in moves if m.kind == ABSORB_AT_INTERIOR]
    rng.shuffle(absorbs)
    for m in absorbs:
        cand = apply_move(ctx, paths, m)
        if ctx.objective(cand) == obj:
            trace.kicks_used += 1
            trace.note("kick", kind=m.kind)
            trace.snap(cand)
            return cand
    for kind in (REROUTE_ENDPOINT, SPLIT_RECOMBINE, ROTATE_CYCLIC):
        pool = [
            m
            for m in moves
            if m.kind == kind and not (kind == ROTATE_CYCLIC and m.data[4] == -1)
        ]
        if pool:
            m = pool[int(rng.integers(len(pool)))]
            cand = apply_move(ctx, paths, m)
            trace.kicks_used += 1
            trace.note("kick", kind=m.kind)
            trace.snap(cand)
            return cand
    return None


def improve(g: Graph, options: ImproveOptions | None = None) -> ImproveResult:
    """Net-reduce, descend, and perturb until the cover stops improving; at
    small n fall back to the exact oracle (run on the original graph). Always
    returns a valid cover."""
    opts = options or ImproveOptions()
    trace = Trace(level=opts.trace_level)
    target = math.ceil(g.n / 10) if g.n >= 10 else 1

    if not g.is_cubic():
        trace.note("warning", message="input is not cubic")
    elif not is_biconnected(g):
        trace.note("warning", message="input is not 2-connected")

    # net reduction: contract until no nets remain
    reduced = g
    records = []
    if g.is_cubic():
        while True:
            nets = find_nets(reduced)
            if not nets:
                break
            reduced, rec = contract_net(reduced, nets[0])
            records.append(rec)
            trace.net_contractions += 1

    ctx = _Ctx(reduced)
    trace.search_host = reduced
    rng = np.random.Generator(np.random.PCG64(opts.seed))

    # at exact-oracle size one descent suffices: the fallback below settles it
    restart_budget = 0 if g.n <= opts.exact_cap else opts.max_restarts
    settled = 0
    best: Paths | None = None
    for restart in range(restart_budget + 1):
        if restart == 0:
            paths = _peel(reduced)
        else:
            trace.restarts_used += 1
            paths = _peel(reduced, rng=rng)
        trace.snap(paths)
        paths = _local_optimum(ctx, paths, opts, trace)
        for _ in range(opts.kick_count):
            if len(paths) <= 1:
                break
            kicked = _random_kick(ctx, paths, rng, trace)
            if kicked is None:
                break
            kicked = _local_optimum(ctx, kicked, opts, trace)
            if ctx.objective(kicked) < ctx.objective(paths):
                paths = kicked
        if best is None or ctx.objective(paths) < ctx.objective(best):
            best = paths
        if len(best) <= max(1, target // 2):
            break  # far enough below the bound that more restarts are noise
        if len(best) <= target:
            # bound met; a few more tries in case the true optimum is lower
            settled += 1
            if settled > 3:
                break

    cover = make_cover(reduced, best)
    require_valid(cover)
    for rec in reversed(records):
        cover = expand_cover(cover, rec)

    if g.n <= opts.exact_cap and len(cover.paths) > 1:
        exact = min_path_cover_exact(g, opts.exact_cap)
        trace.used_exact = True
        trace.note("exact-fallback", heuristic=len(cover.paths), exact=exact.count)
        if exact.count < len(cover.paths):
            cover = exact.cover

    require_valid(cover)
    bound_exceeded = (
        g.n >= 10
        and g.is_cubic()
        and is_biconnected(g)
        and len(cover.paths) > math.ceil(g.n / 10)
    )
    if bound_exceeded:
        trace.note("bound-exceeded", paths=len(cover.paths), bound=math.ceil(g.n / 10))
    return ImproveResult(cover, trace, bound_exceeded)
