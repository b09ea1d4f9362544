"""Per-node reductions applied before any branching.

Components fall into three classes: cliques cost nothing and are dropped;
components fixable by one deletion are fixed greedily (a single deletion
per component is always optimal there); everything else needs at least two
deletions and is left for the branching phase.
"""

from __future__ import annotations

from typing import Iterable, NamedTuple

from .graph import Graph


class ComponentClass(NamedTuple):
    """kind is 'clique', 'fixable' or 'hard'; fix_vertex is set for 'fixable'."""

    kind: str
    fix_vertex: int | None


def classify_component(g: Graph, comp: Iterable[int]) -> ComponentClass:
    """Classify one connected component of g.

    'clique' if it is already a clique, 'fixable' if deleting one vertex
    turns it into a cluster graph, 'hard' otherwise.  For the fixable case
    the witness vertex is chosen deterministically: take the first induced
    P3 (u, v, w) of the component and test deleting u, then v, then w.

    Raises ValueError if comp is not a connected component of g.
    """
    members = frozenset(comp)
    if not members:
        raise ValueError("empty component")
    _check_is_component(g, members)
    want = len(members) - 1
    if all(g.degree(x) == want for x in members):
        return ComponentClass("clique", None)
    p3 = g.find_p3(within=members)
    assert p3 is not None  # non-clique connected graphs contain an induced P3
    for candidate in p3:
        if g.is_cluster_graph(within=members - {candidate}):
            return ComponentClass("fixable", candidate)
    return ComponentClass("hard", None)


def preprocess(g: Graph, k: int) -> tuple[Graph, int, frozenset[int]]:
    """Resolve all cheap components; return (reduced graph, budget, deletions).

    Clique components are dropped outright.  For each fixable component its
    witness vertex is deleted (added to the returned set, budget decremented
    by one) and the clique remnants are dropped too.  The reduced graph
    consists exactly of the hard components; the returned budget may be
    negative, which signals infeasibility to the caller.
    """
    deleted: list[int] = []
    hard: set[int] = set()
    for comp in g.components():
        want = len(comp) - 1
        if all(g.degree(x) == want for x in comp):
            continue
        cls = classify_component(g, comp)
        if cls.kind == "fixable":
            deleted.append(cls.fix_vertex)
        else:
            hard |= comp
    reduced = Graph({v: g.neighbors(v) & hard for v in hard})
    return reduced, k - len(deleted), frozenset(deleted)


def _check_is_component(g: Graph, members: frozenset[int]) -> None:
    for x in members:
        if x not in g:
            raise ValueError(f"vertex {x} not in graph")
        if not g.neighbors(x) <= members:
            raise ValueError("vertex set is not closed under adjacency")
    start = min(members)
    seen = {start}
    frontier = [start]
    while frontier:
        x = frontier.pop()
        for y in g.neighbors(x):
            if y not in seen:
                seen.add(y)
                frontier.append(y)
    if seen != members:
        raise ValueError("vertex set is not connected")
