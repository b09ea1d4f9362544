"""Branch-and-reduce decision solver for cluster vertex deletion.

Each search node preprocesses the residual graph, then picks a pivot in
the first hard component and dispatches on how expensive the pivot's
conflict graph is to cover:

  case 1  cover of size 1, or the conflict graph is a disjoint union of
          cherries: some optimal solution avoids the pivot, so only the
          conflict graph is branched on
  case 2  cover of size exactly 2 (and not two cherries): either delete
          the pivot and branch on the conflict graph of a cover vertex
          whose component stayed messy, or keep the pivot and branch on
          its own conflict graph
  case 3  cover of size 3 or more: delete the pivot, or keep it and
          branch on its conflict graph

Branching on a conflict graph ("expansion") applies rule steps until the
conflict graph has no edges left, recomputing it from the residual graph
after every deletion, and then falls through to a fresh search node.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .conflict import cherry_count, classify_small_cover, conflict_view
from .graph import Graph
from .preprocess import preprocess
from .rules import next_branch_step

PIVOT_RULES = ("min-id", "max-degree")


@dataclass
class SearchStats:
    nodes: int = 0
    leaves: int = 0
    max_depth: int = 0


@dataclass(frozen=True)
class SolveOutcome:
    """Result of one solve: feasibility, a witness if feasible, and the
    size of the explored search tree."""

    feasible: bool
    modulator: frozenset[int] | None
    stats: SearchStats = field(compare=False)


def select_case(g: Graph, v: int) -> tuple[int, tuple[int, int] | None]:
    """Case number for pivot v, plus the cover pair for case 2.

    Requires v to lie in a hard component (its conflict graph then has at
    least one edge).
    """
    cover = classify_small_cover(g, v)
    view = conflict_view(g, v)
    cherries = cherry_count(view) if view.is_explicit else None
    if cover.size == 1 or cherries is not None:
        return 1, None
    if cover.size == 2:
        w1, w2 = sorted(cover.cover)
        return 2, (w1, w2)
    return 3, None


def solve_decision(g: Graph, k: int, *, full_tree: bool = False, pivot_rule: str = "min-id") -> SolveOutcome:
    """Can deleting at most k vertices of g leave only cliques?

    By default the search stops at the first feasible leaf; with
    `full_tree` the entire tree is explored (the reported modulator is
    still the first feasible one in branch order).  `pivot_rule` picks the
    pivot vertex inside the first hard component: "min-id" (default) or
    "max-degree" with ties broken towards smaller ids.
    """
    if k < 0:
        raise ValueError(f"budget must be non-negative, got {k}")
    if pivot_rule not in PIVOT_RULES:
        raise ValueError(f"unknown pivot rule {pivot_rule!r}")
    search = _Search(full_tree, pivot_rule)
    feasible = search.fresh(g, k)
    return SolveOutcome(feasible, search.first_solution if feasible else None, search.stats)


def solve_min(g: Graph, *, full_tree: bool = False, pivot_rule: str = "min-id") -> SolveOutcome:
    """Smallest k for which g is solvable, found by iterative deepening.

    Returns the outcome of the first feasible round; node and leaf counts
    are summed over all rounds and max_depth is the maximum over them.
    """
    total = SearchStats()
    k = 0
    while True:
        out = solve_decision(g, k, full_tree=full_tree, pivot_rule=pivot_rule)
        total.nodes += out.stats.nodes
        total.leaves += out.stats.leaves
        total.max_depth = max(total.max_depth, out.stats.max_depth)
        if out.feasible:
            return SolveOutcome(True, out.modulator, total)
        k += 1


class _Search:
    """Mutable state for one decision run."""

    def __init__(self, full_tree: bool, pivot_rule: str):
        self.full_tree = full_tree
        self.pivot_rule = pivot_rule
        self.stats = SearchStats()
        self.first_solution: frozenset[int] | None = None
        self._path: list[int] = []  # vertices deleted along the current branch

    def fresh(self, g: Graph, k: int) -> bool:
        self.stats.nodes += 1
        g, k, removed = preprocess(g, k)
        base = len(self._path)
        self._path.extend(sorted(removed))
        result = self._dispatch(g, k)
        del self._path[base:]
        return result

    def _dispatch(self, g: Graph, k: int) -> bool:
        if k < 0:
            return self._leaf(False)
        if g.n == 0:
            return self._leaf(True)
        if k == 0:
            # every surviving component needs deletions the budget cannot pay
            return self._leaf(False)
        v = self._pivot(g)
        case, pair = select_case(g, v)
        if case == 1:
            return self.expand(g, k, v)
        if case == 2:
            w = self._messy_cover_vertex(g, v, pair)
            found = self._try_delete_pivot(g, k, v, partner=w)
            if found and not self.full_tree:
                return True
            return self.expand(g, k, v) or found
        found = self._try_delete_pivot(g, k, v, partner=None)
        if found and not self.full_tree:
            return True
        return self.expand(g, k, v) or found

    def _try_delete_pivot(self, g: Graph, k: int, v: int, partner: int | None) -> bool:
        child = g.delete_vertices((v,))
        self._path.append(v)
        if partner is None:
            found = self.fresh(child, k - 1)
        else:
            found = self.expand(child, k - 1, partner)
        self._path.pop()
        return found

    def expand(self, g: Graph, k: int, v: int) -> bool:
        self.stats.nodes += 1
        if k < 0:
            return self._leaf(False)
        step = next_branch_step(g, v)
        if step is None:
            return self.fresh(g, k)
        if k == 0:
            return self._leaf(False)
        found = False
        for alt in step.alternatives:
            drop = len(alt)
            if drop > k:
                # the child would start with a negative budget; account for
                # it as the leaf it would be, without building the graph
                self.stats.nodes += 1
                self._path.extend(sorted(alt))
                self._leaf(False)
                del self._path[-drop:]
                continue
            child = g.delete_vertices(alt)
            self._path.extend(sorted(alt))
            got = self.expand(child, k - drop, v)
            del self._path[-drop:]
            if got:
                found = True
                if not self.full_tree:
                    return True
        return found

    def _leaf(self, feasible: bool) -> bool:
        self.stats.leaves += 1
        if len(self._path) > self.stats.max_depth:
            self.stats.max_depth = len(self._path)
        if feasible and self.first_solution is None:
            self.first_solution = frozenset(self._path)
        return feasible

    def _pivot(self, g: Graph) -> int:
        comp = g.components()[0]
        if self.pivot_rule == "max-degree":
            best = None
            for x in sorted(comp):
                if best is None or g.degree(x) > g.degree(best):
                    best = x
            return best
        return min(comp)

    def _messy_cover_vertex(self, g: Graph, v: int, pair: tuple[int, int]) -> int:
        """The cover vertex whose component after deleting v is not a clique.

        At least one of the two qualifies: v sits in a hard component, so
        deleting v alone cannot leave a cluster graph there.
        """
        rest = g.delete_vertices((v,))
        for w in pair:
            comp = next(c for c in rest.components() if w in c)
            want = len(comp) - 1
            if any(rest.degree(x) != want for x in comp):
                return w
        raise AssertionError("no cover vertex in a non-clique component")
