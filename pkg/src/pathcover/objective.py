"""The 7-component lexicographic objective ranking path covers.

Minimized left to right:
  c1 path count
  c2 number of 1-paths
  c3 number of paths that are 3-paths or have a spanning cycle on their
     vertex set (cyclic paths)
  c4 number of bad endpoints (two specific cross-path chord patterns)
  c5 number of annoying endpoints (a four-edge cross-path pattern)
  c6 number of weighty vertices
  c7 negated endpoint spread: minus the number of interior vertices strictly
     between each endpoint of a non-cyclic path and its furthest neighbor on
     that path, summed over both endpoints of every non-cyclic path

All components are nonnegative integers except c7 <= 0, so lexicographic
minimization maximizes the spread last.
"""

from __future__ import annotations

from dataclasses import dataclass

from .classify import WEIGHTY, classify
from .cover import PathCover, is_cyclic_path


@dataclass(frozen=True, order=True)
class ObjectiveVector:
    c1: int
    c2: int
    c3: int
    c4: int
    c5: int
    c6: int
    c7: int

    def as_tuple(self) -> tuple[int, ...]:
        return (self.c1, self.c2, self.c3, self.c4, self.c5, self.c6, self.c7)


def _oriented(path: tuple[int, ...]):
    yield path
    if len(path) > 1:
        yield tuple(reversed(path))


def endpoint_slots(cover: PathCover):
    """(path_index, oriented path) for each endpoint; 1-paths give one slot."""
    for pi, p in enumerate(cover.paths):
        yield pi, p
        if len(p) > 1:
            yield pi, tuple(reversed(p))


def is_bad_endpoint(cover: PathCover, pi: int, oriented: tuple[int, ...]) -> tuple | None:
    """The endpoint oriented[0] is bad if for some other path q (in some
    orientation) it is chord-adjacent to q[1] and q[4] with q[0]~q[3], or to
    q[1] and q[5] with q[0]~q[4]. Returns a witness tuple or None."""
    g = cover.host
    owner = cover.path_of()
    x1 = oriented[0]
    hits: dict[int, list[int]] = {}
    for w in g.adj[x1]:
        if len(oriented) > 1 and w == oriented[1]:
            continue
        qi = owner[w]
        if qi != pi:
            hits.setdefault(qi, []).append(w)
    for qi, verts in hits.items():
        if len(verts) < 2:
            continue
        for q in _oriented(cover.paths[qi]):
            ipos = {v: i for i, v in enumerate(q)}
            ps = {ipos[v] for v in verts}
            if 1 in ps and 4 in ps and len(q) >= 6 and g.has_edge(q[0], q[3]):
                return ("v1", x1, qi, q[1], q[4], (q[0], q[3]))
            if 1 in ps and 5 in ps and len(q) >= 7 and g.has_edge(q[0], q[4]):
                return ("v2", x1, qi, q[1], q[5], (q[0], q[4]))
    return None


def is_annoying_endpoint(cover: PathCover, pi: int, oriented: tuple[int, ...]) -> tuple | None:
    """The endpoint x' = oriented[0] is annoying if it has an own-path chord
    to position s+1 (2 <= s <= len-3 in interior indexing) and a cross-path
    edge to some q[i], with q[0] adjacent to position s-1 and position s
    adjacent to q[i+1], for another path q in some orientation."""
    g = cover.host
    owner = cover.path_of()
    pp = oriented
    m = len(pp)
    if m < 5:
        return None
    x1 = pp[0]
    ipos = {v: j for j, v in enumerate(pp)}
    chords = []
    cross = []
    for w in g.adj[x1]:
        if w == pp[1]:
            continue
        if owner[w] == pi:
            j = ipos[w]
            # own-path chord to u'_{s+1} with 2 <= s <= l-1, i.e. 3 <= j <= m-2
            if 3 <= j <= m - 2:
                chords.append(j)
        else:
            cross.append(w)
    if not chords or not cross:
        return None
    for j in chords:
        s = j - 1
        for w in cross:
            qi = owner[w]
            for q in _oriented(cover.paths[qi]):
                qpos = {v: t for t, v in enumerate(q)}
                i = qpos[w]
                if not (1 <= i <= len(q) - 3):
                    continue
                if g.has_edge(q[0], pp[s - 1]) and g.has_edge(pp[s], q[i + 1]):
                    return (x1, qi, s, w, (q[0], pp[s - 1]), (pp[s], q[i + 1]))
    return None


def cyclic_flags(cover: PathCover, cache: dict | None = None) -> list[bool]:
    flags = []
    for p in cover.paths:
        if cache is not None:
            key = frozenset(p)
            if key in cache:
                flags.append(cache[key])
                continue
            val = is_cyclic_path(cover.host, p)
            cache[key] = val
            flags.append(val)
        else:
            flags.append(is_cyclic_path(cover.host, p))
    return flags


def objective_vector(cover: PathCover, _cyclic_cache: dict | None = None) -> ObjectiveVector:
    g = cover.host
    flags = cyclic_flags(cover, _cyclic_cache)
    c1 = len(cover.paths)
    c2 = sum(1 for p in cover.paths if len(p) == 1)
    c3 = sum(1 for p, cyc in zip(cover.paths, flags) if len(p) == 3 or cyc)
    c4 = 0
    c5 = 0
    for pi, oriented in endpoint_slots(cover):
        if is_bad_endpoint(cover, pi, oriented):
            c4 += 1
        if is_annoying_endpoint(cover, pi, oriented):
            c5 += 1
    classes = classify(cover)
    c6 = sum(1 for r in classes.roles if r == WEIGHTY)
    spread = 0
    for p, cyc in zip(cover.paths, flags):
        if cyc or len(p) < 2:
            continue
        for oriented in _oriented(p):
            ipos = {v: i for i, v in enumerate(oriented)}
            far = max((ipos[w] for w in g.adj[oriented[0]] if w in ipos), default=0)
            spread += max(0, far - 1)
    return ObjectiveVector(c1, c2, c3, c4, c5, c6, -spread)
