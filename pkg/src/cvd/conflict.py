"""Conflict graph of a pivot vertex.

For a pivot v, the conflict graph lives on the vertices at distance 1 and 2
from v.  Two of them are adjacent exactly when, together with v, they span
an induced P3: a non-adjacent pair of neighbours of v, or a neighbour of v
together with an adjacent second-ring vertex.  Deleting a vertex cover of
the conflict graph therefore turns v's component into a clique.

Building the whole conflict graph can cost quadratic time, but that is
only ever needed when its maximum degree is at most 2.  Otherwise a probe
that just locates one vertex of degree >= 3 suffices, and that runs in
time linear in the size of g.

A recurring special shape: a *cherry* is a conflict-graph component that
is a 3-vertex path whose middle vertex neighbours the pivot and whose
endpoints sit in the second ring.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import NamedTuple

from .graph import Graph


@dataclass(frozen=True)
class ConflictView:
    """Conflict graph of `pivot`, either probed or fully materialised.

    Exactly one of `hub` and `adj` is set.  `hub` is the smallest-id vertex
    of conflict degree >= 3 paired with its conflict neighbourhood; `adj`
    is the full adjacency when no such vertex exists (max degree <= 2).
    """

    pivot: int
    dist1: frozenset[int]
    dist2: frozenset[int]
    hub: tuple[int, frozenset[int]] | None
    adj: dict[int, frozenset[int]] | None

    @property
    def is_explicit(self) -> bool:
        return self.adj is not None

    def vertices(self) -> frozenset[int]:
        return self.dist1 | self.dist2


class CoverClass(NamedTuple):
    """Minimum vertex cover size of a conflict graph, capped at 3.

    size 1 or 2 is exact and comes with a concrete cover; size 3 means
    "at least 3" and carries no witness.
    """

    size: int
    cover: frozenset[int] | None


def distance_sets(g: Graph, v: int) -> tuple[frozenset[int], frozenset[int]]:
    """Vertices at distance exactly 1 and exactly 2 from v."""
    d1 = g.neighbors(v)
    d2: set[int] = set()
    for u in d1:
        d2 |= g.neighbors(u)
    d2 -= d1
    d2.discard(v)
    return d1, frozenset(d2)


def conflict_view(g: Graph, v: int, excluded: frozenset[int] = frozenset()) -> ConflictView:
    """Probe the conflict graph of v, ignoring the vertices in `excluded`.

    `excluded` removes vertices from the conflict graph only; g itself is
    left alone.  The view degrades to a single high-degree vertex whenever
    one exists, and is materialised in full otherwise.
    """
    d1_full, d2_full = distance_sets(g, v)
    d1 = d1_full - excluded
    d2 = d2_full - excluded

    # Conflict degree of x in d1: non-neighbours of x within d1, plus
    # g-neighbours of x within d2.  For x in d2: g-neighbours within d1.
    in_d1: dict[int, int] = {}
    in_d2: dict[int, int] = {}
    for x in d1 | d2:
        c1 = c2 = 0
        for y in g.neighbors(x):
            if y in d1:
                c1 += 1
            elif y in d2:
                c2 += 1
        in_d1[x] = c1
        in_d2[x] = c2

    slots = len(d1) - 1
    hub = None
    for x in sorted(d1 | d2):
        deg = (slots - in_d1[x]) + in_d2[x] if x in d1 else in_d1[x]
        if deg >= 3:
            hub = x
            break

    if hub is not None:
        return ConflictView(v, d1, d2, (hub, _conflict_neighbors(g, hub, d1, d2)), None)
    adj = {x: _conflict_neighbors(g, x, d1, d2) for x in sorted(d1 | d2)}
    return ConflictView(v, d1, d2, None, adj)


def _conflict_neighbors(g: Graph, x: int, d1: frozenset[int], d2: frozenset[int]) -> frozenset[int]:
    if x in d1:
        return (d1 - g.neighbors(x) - {x}) | (g.neighbors(x) & d2)
    return g.neighbors(x) & d1


def classify_small_cover(g: Graph, v: int) -> CoverClass:
    """Decide whether the conflict graph of v has a vertex cover of size 1 or 2.

    Any vertex of degree >= 3 belongs to every cover of size <= 2, so up to
    two such vertices are committed and the probe restarted without them.
    What remains has maximum degree <= 2, i.e. is a union of paths and
    cycles, where a path on l vertices needs floor(l/2) cover vertices and
    a cycle needs ceil(l/2).  Returned covers are deterministic: within
    each path or cycle the lexicographically smallest minimum cover.

    Raises ValueError if the conflict graph has no edge at all.
    """
    committed: list[int] = []
    view = conflict_view(g, v)
    while view.hub is not None:
        if len(committed) == 2:
            # a third high-degree vertex survives the two committed ones:
            # {committed} was the only candidate cover of size <= 2
            return CoverClass(3, None)
        committed.append(view.hub[0])
        view = conflict_view(g, v, excluded=frozenset(committed))

    base, base_cover = _paths_cycles_cover(view)
    if not committed:
        if base == 0:
            raise ValueError("conflict graph has no edges")
        if base >= 3:
            return CoverClass(3, None)
        return CoverClass(base, base_cover)
    if len(committed) == 1:
        if base == 0:
            return CoverClass(1, frozenset(committed))
        if base == 1:
            return CoverClass(2, frozenset(committed) | base_cover)
        return CoverClass(3, None)
    # two committed vertices: the only candidate cover of size <= 2
    if base == 0:
        return CoverClass(2, frozenset(committed))
    return CoverClass(3, None)


def _paths_cycles_cover(view: ConflictView) -> tuple[int, frozenset[int] | None]:
    """Minimum cover size of an explicit max-degree-2 view, with witness.

    The witness is only materialised when the total is at most 2; beyond
    that the callers never need one.
    """
    adj = view.adj
    assert adj is not None
    comps = _h_components(adj)
    total = 0
    nontrivial: list[list[int]] = []
    for comp in comps:
        if len(comp) == 1:
            continue
        edges = sum(len(adj[x]) for x in comp) // 2
        if edges == len(comp):  # cycle
            total += (len(comp) + 1) // 2
        else:  # path
            total += len(comp) // 2
        nontrivial.append(comp)
    if total == 0:
        return 0, frozenset()
    if total >= 3:
        return total, None
    cover: set[int] = set()
    for comp in nontrivial:
        cover |= _smallest_cover(adj, comp)
    return total, frozenset(cover)


def _h_components(adj: dict[int, frozenset[int]]) -> list[list[int]]:
    seen: set[int] = set()
    comps: list[list[int]] = []
    for start in sorted(adj):
        if start in seen:
            continue
        comp = {start}
        frontier = [start]
        while frontier:
            x = frontier.pop()
            for y in adj[x]:
                if y not in comp:
                    comp.add(y)
                    frontier.append(y)
        seen |= comp
        comps.append(sorted(comp))
    return comps


def _smallest_cover(adj: dict[int, frozenset[int]], comp: list[int]) -> set[int]:
    """Lexicographically smallest minimum vertex cover of one tiny component."""
    edges = [(x, y) for x in comp for y in adj[x] if x < y]
    for size in range(1, len(comp) + 1):
        for cand in combinations(comp, size):
            chosen = set(cand)
            if all(x in chosen or y in chosen for x, y in edges):
                return chosen
    return set()


def cherry_count(view: ConflictView) -> int | None:
    """Number of cherry components, if cherries are all there is.

    Returns s >= 1 when every component with an edge is a cherry (isolated
    vertices are fine) and at least one cherry exists; None otherwise.
    Requires an explicit view: a probed view has a degree-3 vertex and so
    cannot consist of cherries.

    Raises ValueError on a probed view.
    """
    if view.adj is None:
        raise ValueError("cherry_count needs an explicit conflict view")
    adj = view.adj
    count = 0
    for comp in _h_components(adj):
        if len(comp) == 1:
            continue
        if len(comp) != 3:
            return None
        mids = [x for x in comp if len(adj[x]) == 2]
        if len(mids) != 1:  # triangle or broken shape
            return None
        mid = mids[0]
        tips = [x for x in comp if x != mid]
        if mid not in view.dist1 or any(t not in view.dist2 for t in tips):
            return None
        count += 1
    return count if count >= 1 else None
