"""Exact oracles: minimum path cover by subset DP, Hamiltonian path/cycle
search, and the parity lower bound for edge-gadget blowups."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _kernels
from .cover import PathCover, make_cover, require_valid
from .errors import MapMismatchError, SearchTimeout, TooLargeError
from .graph import Graph

DEFAULT_EXACT_CAP = 22
DEFAULT_NODE_BUDGET = 50_000_000


@dataclass(frozen=True)
class ExactResult:
    count: int
    cover: PathCover


def _masks(g: Graph) -> np.ndarray:
    m = np.zeros(g.n, np.int64)
    for u in range(g.n):
        for w in g.adj[u]:
            m[u] |= np.int64(1) << w
    return m


def min_path_cover_exact(g: Graph, exact_cap: int = DEFAULT_EXACT_CAP) -> ExactResult:
    """Exact p(G) with one witness cover. Raises TooLargeError above the cap."""
    if g.n > exact_cap:
        raise TooLargeError(f"n={g.n} exceeds exact_cap={exact_cap}")
    if g.n == 0:
        return ExactResult(0, make_cover(g, []))
    out = np.empty(2 * g.n, np.int32)
    count = _kernels.min_cover_dp(_masks(g), g.n, out)
    paths: list[tuple[int, ...]] = []
    cur: list[int] = []
    i = 0
    consumed = g.n + count - 1
    while i < consumed:
        v = int(out[i])
        if v < 0:
            paths.append(tuple(cur))
            cur = []
        else:
            cur.append(v)
        i += 1
    paths.append(tuple(cur))
    # normalize for reproducibility: orient small-end first, sort by head
    paths = [p if p[0] <= p[-1] else tuple(reversed(p)) for p in paths]
    paths.sort()
    cover = make_cover(g, paths)
    require_valid(cover)
    assert len(cover.paths) == count
    return ExactResult(count, cover)


def _ham(g: Graph, want_cycle: bool, node_budget: int) -> tuple[bool, tuple[int, ...] | None]:
    n = g.n
    if n == 0:
        return False, None
    if n <= _kernels.KERNEL_MAX_N:
        out = np.empty(max(n, 1), np.int32)
        status = _kernels.ham_search(_masks(g), n, want_cycle, node_budget, out)
        if status == _kernels.BUDGET_EXCEEDED:
            raise SearchTimeout(f"node budget {node_budget} exhausted (n={n})")
        if status == _kernels.FOUND:
            return True, tuple(int(v) for v in out[:n])
        return False, None
    return _ham_bigint(g, want_cycle, node_budget)


def _ham_bigint(g: Graph, want_cycle: bool, node_budget: int) -> tuple[bool, tuple[int, ...] | None]:
    """Python-int fallback for n > 62. Same pruning strategy, recursive."""
    n = g.n
    masks = g.neighbor_masks()
    full = (1 << n) - 1
    budget = [node_budget]

    def rec(cur: int, visited: int, path: list[int]):
        if visited == full:
            if not want_cycle or (masks[cur] >> path[0]) & 1:
                return list(path)
            return None
        budget[0] -= 1
        if budget[0] <= 0:
            raise SearchTimeout(f"node budget {node_budget} exhausted (n={n})")
        remaining = full & ~visited
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
        cands = []
        avail = masks[cur] & remaining
        while avail:
            v = (avail & -avail).bit_length() - 1
            avail &= avail - 1
            cands.append((bin(masks[v] & remaining).count("1"), v))
        cands.sort()
        for _, v in cands:
            path.append(v)
            got = rec(v, visited | (1 << v), path)
            if got is not None:
                return got
            path.pop()
        return None

    starts = [0] if want_cycle else list(range(n))
    for s in starts:
        got = rec(s, 1 << s, [s])
        if got is not None:
            return True, tuple(got)
    return False, None


def ham_path_exists(
    g: Graph, node_budget: int = DEFAULT_NODE_BUDGET
) -> tuple[bool, tuple[int, ...] | None]:
    """Exact Hamiltonian-path decision with witness. Raises SearchTimeout when
    the node budget runs out (never returns a wrong boolean)."""
    return _ham(g, False, node_budget)


def ham_cycle_exists(
    g: Graph, node_budget: int = DEFAULT_NODE_BUDGET
) -> tuple[bool, tuple[int, ...] | None]:
    """Exact Hamiltonian-cycle decision with witness."""
    return _ham(g, True, node_budget)


def parity_lower_bound(h: Graph, gadget_map) -> int:
    """Lower bound on p(h) for a K4-minus-an-edge blowup: every base vertex has
    odd degree and each path in the induced edge-decomposition of the base can
    fix the parity of at most two of them, so at least n_base/2 paths are
    needed. Returns n_base/2 = n(h)/14 after verifying the map describes h."""
    base_n = gadget_map.base_n
    if h.n != 7 * base_n:
        raise MapMismatchError(f"n(H)={h.n} != 7*{base_n}")
    seen: set[int] = set()
    for (u, v), (quad, attach) in gadget_map.items():
        w0, w1, w2, w3 = quad
        for w in quad:
            if w in seen or w < base_n or w >= h.n:
                raise MapMismatchError(f"bad gadget vertex {w} for edge ({u},{v})")
            seen.add(w)
        wanted = [(w0, w1), (w0, w2), (w1, w2), (w1, w3), (w2, w3)]
        for a, b in wanted:
            if not h.has_edge(a, b):
                raise MapMismatchError(f"missing gadget edge ({a},{b})")
        if h.has_edge(w0, w3):
            raise MapMismatchError(f"gadget for ({u},{v}) is a full K4")
        if attach != ((u, w0), (v, w3)):
            raise MapMismatchError(f"attachment mismatch for edge ({u},{v})")
        for a, b in attach:
            if not h.has_edge(a, b):
                raise MapMismatchError(f"missing attachment edge ({a},{b})")
    if len(seen) != h.n - base_n:
        raise MapMismatchError("gadget vertices do not partition V(H) minus the base")
    if base_n % 2 != 0:
        raise MapMismatchError("base graph of a cubic blowup must have even order")
    return base_n // 2
