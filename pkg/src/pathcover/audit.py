"""Structural audits: necessary conditions every objective-optimal cover
satisfies. A violation proves the cover is not optimal (and names the
rearrangement opportunity); a clean report is consistent with optimality but
does not certify it."""

from __future__ import annotations

from dataclasses import dataclass

from .classify import HEAVY, LIGHT, VertexClass, classify
from .cover import PathCover, is_cyclic_path, require_valid
from .errors import SearchTimeout
from .objective import endpoint_slots, is_annoying_endpoint, is_bad_endpoint


@dataclass(frozen=True)
class Violation:
    rule: str
    location: tuple
    witness: tuple

    def to_json(self) -> dict:
        return {"rule": self.rule, "location": self.location, "witness": self.witness}


@dataclass(frozen=True)
class AuditReport:
    violations: tuple[Violation, ...]

    @property
    def passed(self) -> bool:
        return not self.violations

    def to_json(self) -> dict:
        return {"passed": self.passed, "violations": [v.to_json() for v in self.violations]}


# rule tags, named for the structural facts they check
ADJACENT_ENDPOINTS = "adjacent-endpoints"
CYCLIC_CONTACT = "cyclic-path-contact"
FORBIDDEN_SHAPE = "forbidden-path-shape"
BAD_ENDPOINT = "bad-endpoint"
ANNOYING_ENDPOINT = "annoying-endpoint"
CHORD_NEIGHBOR = "endpoint-chord-neighbors"
PE_INDEPENDENT = "pe-independence"
HEAVY_LIGHT_EDGE = "heavy-light-adjacency"


def audit_structure(
    cover: PathCover,
    classes: VertexClass | None = None,
    cycle_budget: int = 200_000,
) -> AuditReport:
    """Check all structural predicates; each violation carries a concrete
    witness usable as an improvement hint.

    Spanning-cycle tests run under a node budget; a path whose test times out
    is treated as non-cyclic. That cannot hide a conservation-breaking case:
    any edge between two path endpoints (the only way weight transfers go
    undelivered) is caught by the adjacency checks without any search."""
    require_valid(cover)
    g = cover.host
    owner = cover.path_of()
    if classes is None:
        classes = classify(cover)
    violations: list[Violation] = []

    cyclic = []
    for p in cover.paths:
        try:
            cyclic.append(is_cyclic_path(g, p, node_budget=cycle_budget))
        except SearchTimeout:
            cyclic.append(False)

    # endpoints of different paths must not be adjacent; cyclic paths act as
    # all-endpoint paths for this purpose
    endpoint_sets = []
    for p, cyc in zip(cover.paths, cyclic):
        if cyc:
            endpoint_sets.append(set(p))
        elif len(p) == 1:
            endpoint_sets.append({p[0]})
        else:
            endpoint_sets.append({p[0], p[-1]})
    for pi, p in enumerate(cover.paths):
        for x in sorted(endpoint_sets[pi]):
            for w in g.adj[x]:
                qi = owner[w]
                if qi <= pi or qi == pi:
                    continue
                if w in endpoint_sets[qi]:
                    rule = (
                        CYCLIC_CONTACT if (cyclic[pi] or cyclic[qi]) else ADJACENT_ENDPOINTS
                    )
                    violations.append(Violation(rule, (pi, qi), (x, w)))

    for pi, (p, cyc) in enumerate(zip(cover.paths, cyclic)):
        if len(p) == 1:
            violations.append(Violation(FORBIDDEN_SHAPE, (pi,), ("1-path", p[0])))
        elif len(p) == 3:
            violations.append(Violation(FORBIDDEN_SHAPE, (pi,), ("3-path",) + p))
        if cyc:
            violations.append(Violation(FORBIDDEN_SHAPE, (pi,), ("cyclic", len(p))))

    for pi, oriented in endpoint_slots(cover):
        bad = is_bad_endpoint(cover, pi, oriented)
        if bad:
            violations.append(Violation(BAD_ENDPOINT, (pi, oriented[0]), bad))
        annoying = is_annoying_endpoint(cover, pi, oriented)
        if annoying:
            violations.append(Violation(ANNOYING_ENDPOINT, (pi, oriented[0]), annoying))

    violations.extend(_chord_neighbor_checks(cover, cyclic))

    for u in sorted(classes.pe_candidates):
        for w in g.adj[u]:
            if w > u and w in classes.pe_candidates:
                violations.append(Violation(PE_INDEPENDENT, (u, w), (u, w)))

    hl = {v for v in range(g.n) if classes.roles[v] in (HEAVY, LIGHT)}
    for u in sorted(hl):
        for w in g.adj[u]:
            if w > u and w in hl:
                violations.append(
                    Violation(HEAVY_LIGHT_EDGE, (u, w), (classes.roles[u], classes.roles[w]))
                )

    return AuditReport(tuple(violations))


def _chord_neighbor_checks(cover: PathCover, cyclic: list[bool]) -> list[Violation]:
    """For a non-cyclic path with endpoint chords x~u_i, x~u_j (i < j): the
    chords may not hit consecutive vertices, the vertices just before each
    chord target (seen from x) may have no off-path neighbors, and when the
    far endpoint has no chord into x..u_j those neighbors must stay inside
    x..u_j."""
    g = cover.host
    out: list[Violation] = []
    for pi, p in enumerate(cover.paths):
        if len(p) < 4 or cyclic[pi]:
            continue
        for oriented in (p, tuple(reversed(p))):
            ipos = {v: t for t, v in enumerate(oriented)}
            x = oriented[0]
            y = oriented[-1]
            chords = sorted(ipos[w] for w in g.adj[x] if w in ipos and ipos[w] >= 2)
            if len(chords) < 2:
                continue
            m = len(oriented)
            for a in range(len(chords)):
                for b in range(a + 1, len(chords)):
                    i, j = chords[a], chords[b]
                    if i >= m - 1 or j >= m - 1:
                        continue  # chord to the other endpoint: not an interior pattern
                    if j == i + 1:
                        out.append(
                            Violation(CHORD_NEIGHBOR, (pi, x), ("consecutive-chords", i, j))
                        )
                        continue
                    off = []
                    for t in (i - 1, j - 1):
                        v = oriented[t]
                        for w in g.adj[v]:
                            if w not in ipos:
                                off.append((v, w))
                    if off:
                        out.append(
                            Violation(CHORD_NEIGHBOR, (pi, x), ("off-path-neighbor",) + tuple(off))
                        )
                        continue
                    y_chords_in_prefix = [
                        w
                        for w in g.adj[y]
                        if w in ipos and ipos[w] <= j and w != oriented[-2]
                    ]
                    if not y_chords_in_prefix:
                        for t in (i - 1, j - 1):
                            v = oriented[t]
                            outside = [w for w in g.adj[v] if w in ipos and ipos[w] > j]
                            if outside:
                                out.append(
                                    Violation(
                                        CHORD_NEIGHBOR,
                                        (pi, x),
                                        ("neighbor-beyond-chord", v, tuple(outside)),
                                    )
                                )
    return out
