"""Hot search kernels: subset DP and Hamiltonian backtracking over bitmasks.

All kernels operate on int64 neighbor masks, so they are limited to n <= 62;
callers dispatch to slower big-int Python code above that. Each kernel is
compiled with numba's @njit unless the environment variable PATHCOVER_PURE
is set to a truthy value, in which case the same functions run as plain
Python/numpy (the "pure" lane). benchmarks/bench_kernels.py compares lanes.
"""

from __future__ import annotations

import math
import os

import numpy as np

PURE_ENV = "PATHCOVER_PURE"

_pure = os.environ.get(PURE_ENV, "").strip().lower() not in ("", "0", "false", "no")
USING_NUMBA = False
if not _pure:
    try:
        from numba import njit as _njit

        USING_NUMBA = True
    except ImportError:  # numba genuinely missing: fall back silently
        pass

if USING_NUMBA:
    def njit(func):
        return _njit(cache=True, nogil=True)(func)
else:
    def njit(func):
        return func


def backend() -> str:
    return "numba" if USING_NUMBA else "pure"


KERNEL_MAX_N = 62

FOUND = 1
NOT_FOUND = 0
BUDGET_EXCEEDED = -1


@njit
def _popcount(x):
    x = x - ((x >> 1) & 0x5555555555555555)
    x = (x & 0x3333333333333333) + ((x >> 2) & 0x3333333333333333)
    x = (x + (x >> 4)) & 0x0F0F0F0F0F0F0F0F
    return (x * 0x0101010101010101) >> 56


@njit
def _lowbit_index(x):
    # x must be a positive int64; bits above 61 never occur (n <= 62)
    return int(math.log2(float(x & -x)) + 0.5)


@njit
def _flood(nbr, allowed, start_mask):
    """Vertices reachable from start_mask staying inside allowed | start_mask."""
    reach = start_mask
    frontier = start_mask
    while frontier != 0:
        nxt = np.int64(0)
        f = frontier
        while f != 0:
            v = _lowbit_index(f)
            f &= f - 1
            nxt |= nbr[v]
        nxt &= allowed & ~reach
        reach |= nxt
        frontier = nxt
    return reach


@njit
def _ham_extend(nbr, n, start, want_cycle, budget, out):
    """Depth-first search for a Hamiltonian path (or cycle closing at vertex 0)
    starting at `start`. Returns (status, nodes_used)."""
    full = (np.int64(1) << n) - 1
    visited = np.int64(1) << start
    path = np.empty(n, np.int32)
    path[0] = start
    # per-depth candidate stacks
    cand = np.zeros((n + 1, n), np.int32)
    ncand = np.zeros(n + 1, np.int32)
    icand = np.zeros(n + 1, np.int32)
    depth = 0
    nodes = 0
    cur = start
    zero_bit = np.int64(1)

    # seed candidates of depth 0
    avail = nbr[cur] & ~visited
    k = 0
    while avail != 0:
        v = _lowbit_index(avail)
        avail &= avail - 1
        cand[0, k] = v
        k += 1
    ncand[0] = k
    icand[0] = 0

    while depth >= 0:
        if visited == full:
            if not want_cycle or (nbr[cur] & zero_bit) != 0:
                for i in range(n):
                    out[i] = path[i]
                return FOUND, nodes
            # fall through: backtrack
            icand[depth] = ncand[depth]
        advanced = False
        while icand[depth] < ncand[depth]:
            v = cand[depth, icand[depth]]
            icand[depth] += 1
            vbit = np.int64(1) << v
            if visited & vbit:
                continue
            nodes += 1
            if nodes > budget:
                return BUDGET_EXCEEDED, nodes
            nvis = visited | vbit
            remaining = full & ~nvis
            if remaining != 0:
                # reachability: every unvisited vertex must be reachable from v
                reach = _flood(nbr, remaining, vbit)
                if (reach | nvis) != full:
                    continue
                # degree pruning inside remaining+v (+0 for cycles)
                deg1 = 0
                ok = True
                rem = remaining
                ctx = remaining | vbit
                while rem != 0:
                    w = _lowbit_index(rem)
                    rem &= rem - 1
                    d = _popcount(nbr[w] & ctx)
                    if d == 0:
                        ok = False
                        break
                    if d == 1:
                        if want_cycle:
                            if (nbr[w] & zero_bit) == 0:
                                ok = False
                                break
                            deg1 += 1
                        else:
                            deg1 += 1
                        if deg1 > 1:
                            ok = False
                            break
                if not ok:
                    continue
            elif want_cycle and (nbr[v] & zero_bit) == 0:
                continue
            # commit v
            depth += 1
            path[depth] = v
            visited = nvis
            cur = v
            # order candidates by fewest remaining neighbors
            avail = nbr[cur] & ~visited
            k = 0
            while avail != 0:
                w = _lowbit_index(avail)
                avail &= avail - 1
                cand[depth, k] = w
                k += 1
            # insertion sort by remaining-degree
            for a in range(1, k):
                w = cand[depth, a]
                dw = _popcount(nbr[w] & ~visited)
                b = a - 1
                while b >= 0 and _popcount(nbr[cand[depth, b]] & ~visited) > dw:
                    cand[depth, b + 1] = cand[depth, b]
                    b -= 1
                cand[depth, b + 1] = w
            ncand[depth] = k
            icand[depth] = 0
            advanced = True
            break
        if advanced:
            continue
        # backtrack
        visited &= ~(np.int64(1) << path[depth])
        depth -= 1
        if depth >= 0:
            cur = path[depth]
    return NOT_FOUND, nodes


@njit
def ham_search(nbr, n, want_cycle, budget, out):
    """Hamiltonian path (any endpoints) or cycle search.

    For cycles the start is pinned to vertex 0 (every cycle passes it); for
    paths all start vertices are tried under one shared budget. Returns
    FOUND / NOT_FOUND / BUDGET_EXCEEDED; on FOUND, `out` holds the vertex
    order."""
    if n == 0:
        return NOT_FOUND
    if n == 1:
        if want_cycle:
            return NOT_FOUND
        out[0] = 0
        return FOUND
    if want_cycle:
        status, _ = _ham_extend(nbr, n, 0, True, budget, out)
        return status
    left = budget
    for start in range(n):
        status, used = _ham_extend(nbr, n, start, False, left, out)
        if status == FOUND:
            return FOUND
        if status == BUDGET_EXCEEDED:
            return BUDGET_EXCEEDED
        left -= used
        if left <= 0:
            return BUDGET_EXCEEDED
    return NOT_FOUND


@njit
def min_cover_dp(nbr, n, out):
    """Exact minimum path cover by DP over (visited subset, active endpoint).

    Transitions: extend the active path along an edge, or close it and open a
    new path at any unvisited vertex (the per-mask minimum is collapsed once,
    so opening costs O(n) per mask). Returns the path count; `out` receives
    the witness vertices with -1 between consecutive paths."""
    INF = np.uint8(255)
    size = np.int64(1) << n
    dp = np.full((size, n), INF, np.uint8)
    best = np.full(size, INF, np.uint8)
    for u in range(n):
        dp[np.int64(1) << u, u] = 1
    full = size - 1
    for mask in range(1, size):
        b = INF
        for e in range(n):
            if not (mask >> e) & 1:
                continue
            d = dp[mask, e]
            if d < b:
                b = d
            if d == INF:
                continue
            avail = nbr[e] & ~mask
            while avail != 0:
                u = _lowbit_index(avail)
                avail &= avail - 1
                nm = mask | (np.int64(1) << u)
                if d < dp[nm, u]:
                    dp[nm, u] = d
        best[mask] = b
        if b < INF and mask != full:
            nb = np.uint8(b + 1)
            rest = full & ~mask
            while rest != 0:
                u = _lowbit_index(rest)
                rest &= rest - 1
                nm = mask | (np.int64(1) << u)
                if nb < dp[nm, u]:
                    dp[nm, u] = nb
    count = best[full]
    # witness reconstruction, walking predecessors backward
    e = -1
    for v in range(n):
        if dp[full, v] == count:
            e = v
            break
    mask = full
    idx = 0
    while True:
        out[idx] = e
        idx += 1
        m2 = mask & ~(np.int64(1) << e)
        val = dp[mask, e]
        pred = -1
        it = nbr[e] & m2
        while it != 0:
            e2 = _lowbit_index(it)
            it &= it - 1
            if dp[m2, e2] == val:
                pred = e2
                break
        if pred >= 0:
            mask = m2
            e = pred
            continue
        if m2 == 0:
            break
        out[idx] = -1
        idx += 1
        nxt = -1
        for v in range(n):
            if (m2 >> v) & 1 and dp[m2, v] == val - 1:
                nxt = v
                break
        mask = m2
        e = nxt
    return int(count)


def pure_variant(kernel):
    """The un-jitted version of a kernel (the kernel itself on the pure lane)."""
    return getattr(kernel, "py_func", kernel)
