"""Branching steps on the conflict graph of a pivot.

Each step offers one or two alternative deletion sets; deleting any
alternative from the graph makes progress towards covering the pivot's
conflict graph.  Rules are tried in a fixed order and the first applicable
one wins; vertices of conflict degree 0 are disregarded throughout.

  R1  a vertex u of conflict degree >= 3: take u, or all its neighbours
  R2  a degree-1 pivot neighbour u: taking its sole neighbour dominates
      taking u, so this is a single forced alternative
  R3  a conflict edge between two pivot neighbours u, w: the maximal
      covers here are N(w) and N(u), two alternatives of size 2
  R4  what remains is paths and cycles alternating between the two rings;
      for a cycle C the second-ring side C  ∩ ring2 dominates, a single
      alternative
  R5  for the longest path P (even edge count 2l): either P ∩ ring1
      (l vertices) or P ∩ ring2 (l+1 vertices)
"""

from __future__ import annotations

from dataclasses import dataclass

from .conflict import _h_components, conflict_view
from .graph import Graph


@dataclass(frozen=True)
class BranchStep:
    """One branching step: rule id and its alternative deletion sets.

    Alternatives are ordered smallest drop first; the solver explores them
    in this order.
    """

    rule: str
    alternatives: tuple[frozenset[int], ...]


def next_branch_step(g: Graph, v: int) -> BranchStep | None:
    """First applicable rule for pivot v, or None if its conflict graph is
    edgeless (v's component then being a clique)."""
    view = conflict_view(g, v)
    if view.hub is not None:
        u, nbrs = view.hub
        return BranchStep("R1", (frozenset((u,)), nbrs))

    adj = {x: n for x, n in view.adj.items() if n}
    if not adj:
        return None
    d1 = view.dist1

    for x in sorted(adj):
        if x in d1 and len(adj[x]) == 1:
            return BranchStep("R2", (adj[x],))

    pair = None
    for x in sorted(adj):
        if x not in d1:
            continue
        inner = sorted(y for y in adj[x] if y in d1 and y > x)
        if inner:
            pair = (x, inner[0])
            break
    if pair is not None:
        u, w = pair
        return BranchStep("R3", (adj[w], adj[u]))

    cycles: list[list[int]] = []
    paths: list[list[int]] = []
    for comp in _h_components(adj):
        edges = sum(len(adj[x]) for x in comp) // 2
        (cycles if edges == len(comp) else paths).append(comp)

    if cycles:
        target = min(cycles, key=lambda c: c[0])
        return BranchStep("R4", (frozenset(target) & view.dist2,))

    # all that is left are paths with both endpoints in the second ring
    def path_key(comp: list[int]) -> tuple[int, int]:
        ends = [x for x in comp if len(adj[x]) == 1]
        return (-(len(comp) - 1), min(ends))

    target = min(paths, key=path_key)
    return BranchStep("R5", (frozenset(target) & view.dist1, frozenset(target) & view.dist2))
