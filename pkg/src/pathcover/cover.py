"""Path covers: validity, the spanning-cycle test, serialization, and
net-contraction expansion.

A path is an ordered tuple of distinct vertex ids with consecutive vertices
adjacent in the host graph; a cover is a set of vertex-disjoint paths whose
union is V(host).
"""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

from . import _kernels
from .errors import InvalidCoverError, SearchTimeout
from .graph import ContractionRecord, Graph
from .graph6 import decode_graph6, encode_graph6

Path = tuple[int, ...]


@dataclass(frozen=True)
class PathCover:
    paths: tuple[Path, ...]
    host: Graph

    def __len__(self) -> int:
        return len(self.paths)

    def path_of(self) -> dict[int, int]:
        """vertex -> index of its path."""
        owner = {}
        for i, p in enumerate(self.paths):
            for v in p:
                owner[v] = i
        return owner

    def to_json(self) -> str:
        return json.dumps(
            {"graph6": encode_graph6(self.host), "paths": [list(p) for p in self.paths]}
        )

    @staticmethod
    def from_json(text: str) -> "PathCover":
        data = json.loads(text)
        host = decode_graph6(data["graph6"])
        return make_cover(host, [tuple(p) for p in data["paths"]])


def make_cover(host: Graph, paths) -> PathCover:
    return PathCover(tuple(tuple(p) for p in paths), host)


@dataclass(frozen=True)
class CoverReport:
    ok: bool
    problem: str | None = None
    location: tuple | None = None


def validate_cover(cover: PathCover) -> CoverReport:
    """Check disjointness, coverage, and edge validity; report the first
    violation instead of raising."""
    g = cover.host
    seen: set[int] = set()
    for i, p in enumerate(cover.paths):
        if len(p) == 0:
            return CoverReport(False, "empty path", (i,))
        for j, v in enumerate(p):
            if not (0 <= v < g.n):
                return CoverReport(False, f"vertex {v} out of range", (i, j))
            if v in seen:
                return CoverReport(False, f"vertex {v} repeated", (i, j))
            seen.add(v)
        for j in range(len(p) - 1):
            if not g.has_edge(p[j], p[j + 1]):
                return CoverReport(False, f"missing edge ({p[j]},{p[j + 1]})", (i, j))
    if len(seen) != g.n:
        missing = min(set(range(g.n)) - seen)
        return CoverReport(False, f"vertex {missing} uncovered", (missing,))
    return CoverReport(True)


def require_valid(cover: PathCover) -> None:
    rep = validate_cover(cover)
    if not rep.ok:
        raise InvalidCoverError(f"{rep.problem} at {rep.location}")


def _ham_cycle_bigint(masks: list[int], n: int, budget: int) -> list[int] | None:
    """Spanning-cycle backtracking with python-int masks (n > 62 fallback).
    Returns the cycle as local indices, or None."""
    full = (1 << n) - 1
    left = [budget]

    def rec(cur: int, visited: int, order: list[int]) -> list[int] | None:
        if visited == full:
            return list(order) if masks[cur] & 1 else None
        left[0] -= 1
        if left[0] <= 0:
            raise SearchTimeout(f"spanning-cycle budget {budget} exhausted (k={n})")
        remaining = full & ~visited
        # reachability from cur within remaining
        reach = 1 << cur
        frontier = reach
        while frontier:
            nxt = 0
            f = frontier
            while f:
                v = (f & -f).bit_length() - 1
                f &= f - 1
                nxt |= masks[v]
            nxt &= remaining & ~reach
            reach |= nxt
            frontier = nxt
        if (reach | visited) != full:
            return None
        avail = masks[cur] & remaining
        while avail:
            v = (avail & -avail).bit_length() - 1
            avail &= avail - 1
            order.append(v)
            got = rec(v, visited | (1 << v), order)
            if got is not None:
                return got
            order.pop()
        return None

    return rec(0, 1, [0])


def spanning_cycle(g: Graph, p: Path, node_budget: int | None = None) -> Path | None:
    """A spanning cycle of the subgraph induced by V(p), or None.

    Exact backtracking; the common case (path endpoints adjacent) answers
    immediately. With a node_budget, exhaustion raises SearchTimeout rather
    than returning a wrong answer."""
    k = len(p)
    if k <= 2:
        return None
    if g.has_edge(p[0], p[-1]):
        return tuple(p)
    budget = (1 << 62) if node_budget is None else node_budget
    index = {v: i for i, v in enumerate(p)}
    if k <= _kernels.KERNEL_MAX_N:
        masks = np.zeros(k, np.int64)
        for v in p:
            i = index[v]
            for w in g.adj[v]:
                j = index.get(w)
                if j is not None:
                    masks[i] |= np.int64(1) << j
        out = np.empty(k, np.int32)
        status = _kernels.ham_search(masks, k, True, budget, out)
        if status == _kernels.BUDGET_EXCEEDED:
            raise SearchTimeout(f"spanning-cycle budget {budget} exhausted (k={k})")
        if status == _kernels.FOUND:
            return tuple(p[int(i)] for i in out[:k])
        return None
    bigmasks = [0] * k
    for v in p:
        i = index[v]
        for w in g.adj[v]:
            j = index.get(w)
            if j is not None:
                bigmasks[i] |= 1 << j
    got = _ham_cycle_bigint(bigmasks, k, budget)
    return tuple(p[i] for i in got) if got is not None else None


def is_cyclic_path(g: Graph, p: Path, node_budget: int | None = None) -> bool:
    """True iff the subgraph induced by V(p) has a spanning cycle."""
    return spanning_cycle(g, p, node_budget) is not None


def expand_cover(cover: PathCover, rec: ContractionRecord) -> PathCover:
    """Expand a cover of a net-contracted graph back to the original graph.

    The path through the contracted vertex is routed through the triangle
    (entering at the triangle vertex attached to its mapped predecessor, with
    the third triangle vertex in the middle); every other vertex maps through
    the contraction's vertex_map. The path count is preserved and the result
    is validated against the original graph."""
    require_valid(cover)
    vmap = rec.vertex_map
    u = rec.contracted_vertex
    tri = rec.net.triangle
    by_outside = {out: t for t, out in zip(tri, rec.net.outside)}

    new_paths: list[Path] = []
    for p in cover.paths:
        if u not in p:
            new_paths.append(tuple(vmap[v] for v in p))
            continue
        i = p.index(u)
        mapped = [vmap[v] for v in p]
        if len(p) == 1:
            new_paths.append(tuple(sorted(tri)))
            continue
        if 0 < i < len(p) - 1:
            t_in = by_outside[mapped[i - 1]]
            t_out = by_outside[mapped[i + 1]]
            t_mid = next(t for t in tri if t not in (t_in, t_out))
            new_paths.append(tuple(mapped[:i] + [t_in, t_mid, t_out] + mapped[i + 1:]))
        elif i == 0:
            t_in = by_outside[mapped[1]]
            rest = sorted(t for t in tri if t != t_in)
            new_paths.append(tuple([rest[1], rest[0], t_in] + mapped[1:]))
        else:
            t_in = by_outside[mapped[-2]]
            rest = sorted(t for t in tri if t != t_in)
            new_paths.append(tuple(mapped[:-1] + [t_in, rest[0], rest[1]]))
    out = make_cover(rec.original, new_paths)
    require_valid(out)
    return out
