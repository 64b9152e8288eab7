"""Per-vertex role classification of a path cover on a cubic host.

Roles (mutually exclusive, precedence endpoint > weighty > heavy > light >
pseudo-endpoint > neutral):

  endpoint   - first/last vertex of a path (the single vertex of a 1-path);
  weighty    - adjacent to an endpoint of its own path via a non-path edge;
  heavy      - adjacent, via a non-path edge, to an endpoint of another path;
  pseudo-endpoint (PE) - interior vertex u whose single off-path edge leaves
               its path, in a configuration that would let the path be
               rerouted with u as an endpoint: the two path neighbors of u
               are each either chord-adjacent to the far endpoint or heavy;
  light      - the vertex on the other side of a pseudo-endpoint's off-path
               edge;
  neutral    - everything else.

Overlaps only occur on non-optimal covers; the precedence rule keeps the
counts disjoint so the weight accounting stays exact. A vertex that matches
the PE patterns but whose target is not finally light (it is an endpoint,
weighty, heavy, or itself a PE candidate) classifies neutral; it still
appears in `pe_candidates`, which is what the structural audit inspects.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .cover import PathCover, require_valid

ENDPOINT = "endpoint"
WEIGHTY = "weighty"
HEAVY = "heavy"
LIGHT = "light"
PSEUDO_ENDPOINT = "pe"
NEUTRAL = "neutral"


@dataclass(frozen=True)
class VertexClass:
    roles: tuple[str, ...]
    # per-vertex witness records: tuples like ("weighty", endpoint, vertex)
    witnesses: dict[int, tuple[tuple, ...]]
    raw_weighty: frozenset[int]
    raw_heavy: frozenset[int]
    pe_candidates: frozenset[int]
    # off-path target of each PE candidate
    pe_target: dict[int, int] = field(default_factory=dict)

    def role(self, v: int) -> str:
        return self.roles[v]

    def count(self, path: tuple[int, ...], *roles: str) -> int:
        return sum(1 for v in path if self.roles[v] in roles)


def _endpoints(path: tuple[int, ...]) -> tuple[int, ...]:
    if len(path) == 1:
        return (path[0],)
    return (path[0], path[-1])


def classify(cover: PathCover) -> VertexClass:
    """Assign each vertex exactly one role, with witnesses, per the precedence
    rule. Cover must be valid; host should be cubic (interior vertices are
    assumed to have exactly one off-path edge)."""
    require_valid(cover)
    g = cover.host
    n = g.n
    owner = cover.path_of()
    pos: dict[int, int] = {}
    for p in cover.paths:
        for i, v in enumerate(p):
            pos[v] = i

    is_endpoint = [False] * n
    for p in cover.paths:
        for x in _endpoints(p):
            is_endpoint[x] = True

    path_edge: set[tuple[int, int]] = set()
    for p in cover.paths:
        for a, b in zip(p, p[1:]):
            path_edge.add((a, b) if a < b else (b, a))

    def off_path(u: int, v: int) -> bool:
        return ((u, v) if u < v else (v, u)) not in path_edge

    witnesses: dict[int, list[tuple]] = {v: [] for v in range(n)}
    raw_weighty: set[int] = set()
    raw_heavy: set[int] = set()
    for pi, p in enumerate(cover.paths):
        for x in _endpoints(p):
            for w in g.adj[x]:
                if not off_path(x, w):
                    continue
                if owner[w] == pi:
                    raw_weighty.add(w)
                    witnesses[w].append((WEIGHTY, x, w))
                else:
                    raw_heavy.add(w)
                    witnesses[w].append((HEAVY, x, w))

    roles = [NEUTRAL] * n
    for v in range(n):
        if is_endpoint[v]:
            roles[v] = ENDPOINT
    for v in raw_weighty:
        if roles[v] == NEUTRAL:
            roles[v] = WEIGHTY
    for v in raw_heavy:
        if roles[v] == NEUTRAL:
            roles[v] = HEAVY

    # pseudo-endpoint candidates: interior u with its off-path edge leaving
    # the path, matching one of the reroute patterns (1a)/(1b)/(1c)
    pe_candidates: set[int] = set()
    pe_target: dict[int, int] = {}
    for pi, p in enumerate(cover.paths):
        m = len(p)
        if m < 3:
            continue
        x, y = p[0], p[-1]
        for i in range(1, m - 1):
            u = p[i]
            targets = [w for w in g.adj[u] if w != p[i - 1] and w != p[i + 1]]
            inter = [w for w in targets if owner[w] != pi]
            if not inter:
                continue
            left, right = p[i - 1], p[i + 1]
            cases = []
            if g.has_edge(x, right) and off_path(x, right) and g.has_edge(y, left) and off_path(y, left):
                cases.append(("1a", (x, right), (y, left)))
            if g.has_edge(x, right) and off_path(x, right) and left in raw_heavy:
                cases.append(("1b", (x, right), left))
            if g.has_edge(y, left) and off_path(y, left) and right in raw_heavy:
                cases.append(("1b", (y, left), right))
            if left in raw_heavy and right in raw_heavy:
                cases.append(("1c", left, right))
            if not cases:
                continue
            if roles[u] == NEUTRAL:
                pe_candidates.add(u)
                pe_target[u] = inter[0]
            for c in cases:
                witnesses[u].append((PSEUDO_ENDPOINT,) + c)

    # light: the inter-path neighbor of a PE candidate, unless already taken
    light: set[int] = set()
    for u in sorted(pe_candidates):
        v = pe_target[u]
        if roles[v] == NEUTRAL and v not in pe_candidates:
            light.add(v)
            witnesses[v].append((LIGHT, u, v))
    for v in light:
        roles[v] = LIGHT
    # final PE role: candidates whose target really is light
    for u in sorted(pe_candidates):
        if roles[pe_target[u]] == LIGHT:
            roles[u] = PSEUDO_ENDPOINT

    return VertexClass(
        roles=tuple(roles),
        witnesses={v: tuple(ws) for v, ws in witnesses.items() if ws},
        raw_weighty=frozenset(raw_weighty),
        raw_heavy=frozenset(raw_heavy),
        pe_candidates=frozenset(pe_candidates),
        pe_target=pe_target,
    )
