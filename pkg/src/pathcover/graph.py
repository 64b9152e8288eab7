"""Immutable simple-graph representation, validation, and net contraction.

Vertices are dense integers 0..n-1. Adjacency lists are kept sorted and all
derived outputs use lexicographic orderings so results are reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    DuplicateEdgeError,
    GraphError,
    NotANetError,
    NotCubicError,
    OddOrderCubicError,
    SelfLoopError,
)


class Graph:
    """Undirected simple graph. Immutable after construction."""

    __slots__ = ("n", "adj", "edge_count", "_adjsets")

    def __init__(self, n: int, adj: tuple[tuple[int, ...], ...], edge_count: int):
        self.n = n
        self.adj = adj
        self.edge_count = edge_count
        self._adjsets = tuple(frozenset(nbrs) for nbrs in adj)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adjsets[u]

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adj[v]

    def edges(self) -> list[tuple[int, int]]:
        """All edges as (u, v) with u < v, lexicographically sorted."""
        return [(u, v) for u in range(self.n) for v in self.adj[u] if u < v]

    def is_cubic(self) -> bool:
        return self.n % 2 == 0 and all(len(nbrs) == 3 for nbrs in self.adj)

    def neighbor_masks(self) -> list[int]:
        """Per-vertex neighbor bitmasks (python ints, any n)."""
        masks = []
        for nbrs in self.adj:
            m = 0
            for w in nbrs:
                m |= 1 << w
            masks.append(m)
        return masks

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.edge_count})"


def build_graph(n: int, edges, require_cubic: bool = False) -> Graph:
    """Validate an edge list and build a Graph.

    Raises SelfLoopError / DuplicateEdgeError / GraphError on bad input, and
    NotCubicError (or OddOrderCubicError) when require_cubic is set and the
    result is not 3-regular on an even number of vertices.
    """
    if n < 0:
        raise GraphError(f"negative vertex count {n}")
    seen: set[tuple[int, int]] = set()
    adj: list[list[int]] = [[] for _ in range(n)]
    count = 0
    for e in edges:
        u, v = int(e[0]), int(e[1])
        if u == v:
            raise SelfLoopError(f"self-loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u},{v}) out of range for n={n}")
        key = (u, v) if u < v else (v, u)
        if key in seen:
            raise DuplicateEdgeError(f"duplicate edge {key}")
        seen.add(key)
        adj[u].append(v)
        adj[v].append(u)
        count += 1
    if require_cubic:
        if n % 2 != 0:
            raise OddOrderCubicError(f"cubic graph needs even order, got n={n}")
        for v in range(n):
            if len(adj[v]) != 3:
                raise NotCubicError(f"vertex {v} has degree {len(adj[v])}, expected 3")
    return Graph(n, tuple(tuple(sorted(a)) for a in adj), count)


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return False
    seen = [False] * g.n
    stack = [0]
    seen[0] = True
    k = 0
    while stack:
        v = stack.pop()
        k += 1
        for w in g.adj[v]:
            if not seen[w]:
                seen[w] = True
                stack.append(w)
    return k == g.n


def articulation_points(g: Graph) -> list[int]:
    """Cut vertices by iterative DFS low-points."""
    n = g.n
    disc = [-1] * n
    low = [0] * n
    parent = [-1] * n
    is_art = [False] * n
    timer = 0
    for root in range(n):
        if disc[root] != -1:
            continue
        root_children = 0
        stack: list[tuple[int, int]] = [(root, 0)]
        disc[root] = low[root] = timer
        timer += 1
        while stack:
            v, i = stack[-1]
            if i < len(g.adj[v]):
                stack[-1] = (v, i + 1)
                w = g.adj[v][i]
                if disc[w] == -1:
                    parent[w] = v
                    disc[w] = low[w] = timer
                    timer += 1
                    if v == root:
                        root_children += 1
                    stack.append((w, 0))
                elif w != parent[v]:
                    if disc[w] < low[v]:
                        low[v] = disc[w]
            else:
                stack.pop()
                p = parent[v]
                if p != -1:
                    if low[v] < low[p]:
                        low[p] = low[v]
                    if p != root and low[v] >= disc[p]:
                        is_art[p] = True
        if root_children > 1:
            is_art[root] = True
    return [v for v in range(n) if is_art[v]]


def is_biconnected(g: Graph) -> bool:
    """True iff g is connected, has >= 3 vertices, and has no cut vertex."""
    if g.n < 3:
        return False
    if not is_connected(g):
        return False
    return not articulation_points(g)


@dataclass(frozen=True)
class Net:
    """A triangle whose three neighbors off the triangle are pairwise distinct.

    triangle[i] is adjacent to outside[i].
    """

    triangle: tuple[int, int, int]
    outside: tuple[int, int, int]


@dataclass(frozen=True)
class ContractionRecord:
    """Enough information to expand covers of the contracted graph back.

    vertex_map[r] is the original id of reduced vertex r; the contracted
    vertex maps to the smallest triangle vertex.
    """

    contracted_vertex: int
    net: Net
    vertex_map: tuple[int, ...]
    original: "Graph"


def find_nets(g: Graph) -> list[Net]:
    """All nets of a cubic graph, one per triangle, ordered by sorted triangle."""
    nets = []
    n = g.n
    for a in range(n):
        for b in g.adj[a]:
            if b <= a:
                continue
            for c in g.adj[b]:
                if c <= b or not g.has_edge(a, c):
                    continue
                tri = (a, b, c)
                tri_set = {a, b, c}
                outside = []
                ok = True
                for v in tri:
                    out = [w for w in g.adj[v] if w not in tri_set]
                    if len(out) != 1:
                        ok = False
                        break
                    outside.append(out[0])
                if ok and len(set(outside)) == 3:
                    nets.append(Net(tri, tuple(outside)))
    nets.sort(key=lambda net: net.triangle)
    return nets


def _check_net(g: Graph, net: Net) -> None:
    a, b, c = net.triangle
    if len({a, b, c}) != 3 or not (g.has_edge(a, b) and g.has_edge(b, c) and g.has_edge(a, c)):
        raise NotANetError(f"{net.triangle} is not a triangle of the graph")
    tri_set = set(net.triangle)
    for v, out in zip(net.triangle, net.outside):
        outs = [w for w in g.adj[v] if w not in tri_set]
        if outs != [out]:
            raise NotANetError(f"vertex {v}: outside neighbor mismatch")
    if len(set(net.outside)) != 3:
        raise NotANetError("outside neighbors are not pairwise distinct")


def contract_net(g: Graph, net: Net) -> tuple[Graph, ContractionRecord]:
    """Replace a net's triangle by a single vertex adjacent to the three outside
    neighbors. The reduced graph stays cubic and simple; the record allows
    expanding any cover of the reduced graph back to the original."""
    _check_net(g, net)
    tri = sorted(net.triangle)
    keep_as_contracted = tri[0]
    dropped = {tri[1], tri[2]}
    vertex_map = tuple(v for v in range(g.n) if v not in dropped)
    to_reduced = {orig: r for r, orig in enumerate(vertex_map)}
    contracted = to_reduced[keep_as_contracted]

    tri_set = set(net.triangle)
    edges = []
    for u, v in g.edges():
        if u in tri_set or v in tri_set:
            continue
        edges.append((to_reduced[u], to_reduced[v]))
    for out in net.outside:
        edges.append((contracted, to_reduced[out]))
    reduced = build_graph(g.n - 2, edges, require_cubic=g.is_cubic())
    return reduced, ContractionRecord(contracted, net, vertex_map, g)
