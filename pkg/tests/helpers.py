"""Shared test utilities: tiny graph builders and slow reference
implementations that the fast code is checked against."""

from __future__ import annotations

import random
from itertools import combinations

from cvd.graph import Graph
from cvd.rules import next_branch_step


def build(n: int, edges: list[tuple[int, int]]) -> Graph:
    return Graph.from_edges(range(1, n + 1), edges)


def path_graph(n: int) -> Graph:
    return build(n, [(i, i + 1) for i in range(1, n)])


def cycle_graph(n: int) -> Graph:
    return build(n, [(i, i + 1) for i in range(1, n)] + [(n, 1)])


def complete_graph(n: int) -> Graph:
    return build(n, list(combinations(range(1, n + 1), 2)))


def random_graph(n: int, p: float, rng: random.Random) -> Graph:
    edges = [(i, j) for i, j in combinations(range(1, n + 1), 2) if rng.random() < p]
    return build(n, edges)


def all_graphs(n: int):
    """Every labeled graph on vertices 1..n."""
    pairs = list(combinations(range(1, n + 1), 2))
    for mask in range(1 << len(pairs)):
        yield build(n, [pairs[i] for i in range(len(pairs)) if mask >> i & 1])


def conflict_pairs_reference(g: Graph, v: int) -> set[frozenset[int]]:
    """All pairs {x, y} such that {v, x, y} induces a 3-vertex path.

    Straight from the definition, by triple inspection; independent of the
    conflict-view code.
    """
    out: set[frozenset[int]] = set()
    others = sorted(g.vertices - {v})
    for x, y in combinations(others, 2):
        edges = g.has_edge(v, x) + g.has_edge(v, y) + g.has_edge(x, y)
        if edges == 2:
            out.add(frozenset((x, y)))
    return out


def reference_conflict_adj(g: Graph, v: int) -> dict[int, set[int]]:
    """Adjacency of the full conflict graph, built from the pair reference."""
    adj: dict[int, set[int]] = {}
    for pair in conflict_pairs_reference(g, v):
        x, y = sorted(pair)
        adj.setdefault(x, set()).add(y)
        adj.setdefault(y, set()).add(x)
    return adj


def min_cover_size(adj: dict[int, set[int]]) -> int:
    """Brute-force minimum vertex cover size of a small graph."""
    vertices = sorted(adj)
    edges = [(x, y) for x in vertices for y in adj[x] if x < y]
    if not edges:
        return 0
    for size in range(1, len(vertices) + 1):
        for cand in combinations(vertices, size):
            chosen = set(cand)
            if all(x in chosen or y in chosen for x, y in edges):
                return size
    raise AssertionError


def covers(adj: dict[int, set[int]], chosen: frozenset[int]) -> bool:
    return all(x in chosen or y in chosen for x in adj for y in adj[x] if x < y)


def expansion_leaves(g: Graph, v: int) -> list[frozenset[int]]:
    """Deleted sets at the leaves of the full rule expansion for pivot v,
    run without any budget, in branch order."""
    out: list[frozenset[int]] = []

    def walk(current: Graph, deleted: frozenset[int]) -> None:
        step = next_branch_step(current, v)
        if step is None:
            out.append(deleted)
            return
        for alt in step.alternatives:
            walk(current.delete_vertices(alt), deleted | alt)

    walk(g, frozenset())
    return out


def all_min_solutions(g: Graph, opt: int) -> list[frozenset[int]]:
    """Every deletion set of exactly the optimum size that works."""
    out = []
    for combo in combinations(sorted(g.vertices), opt):
        if g.is_cluster_graph(within=g.vertices - set(combo)):
            out.append(frozenset(combo))
    return out
