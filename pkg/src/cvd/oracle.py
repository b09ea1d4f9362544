"""Brute-force reference for cluster vertex deletion.

Enumerates deletion sets by increasing size, in lexicographic order per
size, until one leaves only cliques.  Runs on its own bitset
representation and shares nothing with the branching solver, so the two
can be played against each other in tests.
"""

from __future__ import annotations

from itertools import combinations

from .graph import Graph

SIZE_GUARD = 20


def oracle_min(g: Graph, *, force: bool = False) -> tuple[int, frozenset[int]]:
    """Optimum deletion count and its lexicographically smallest witness.

    Exponential in g.n; refuses graphs larger than 20 vertices unless
    `force` is given.
    """
    if g.n > SIZE_GUARD and not force:
        raise ValueError(f"refusing brute force on {g.n} > {SIZE_GUARD} vertices (use force to override)")
    order = sorted(g.vertices)
    index = {v: i for i, v in enumerate(order)}
    nbr = [0] * len(order)
    for v in order:
        mask = 0
        for u in g.neighbors(v):
            mask |= 1 << index[u]
        nbr[index[v]] = mask
    everyone = (1 << len(order)) - 1

    def clustered(alive: int) -> bool:
        left = alive
        while left:
            seed = left & -left
            comp = 0
            frontier = seed
            while frontier:
                comp |= frontier
                grown = 0
                bits = frontier
                while bits:
                    low = bits & -bits
                    grown |= nbr[low.bit_length() - 1] & alive
                    bits ^= low
                frontier = grown & ~comp
            bits = comp
            while bits:
                low = bits & -bits
                if nbr[low.bit_length() - 1] & alive != comp ^ low:
                    return False
                bits ^= low
            left &= ~comp
        return True

    for size in range(len(order) + 1):
        for combo in combinations(range(len(order)), size):
            removed = 0
            for i in combo:
                removed |= 1 << i
            if clustered(everyone & ~removed):
                return size, frozenset(order[i] for i in combo)
    raise AssertionError("deleting every vertex always succeeds")


def oracle_decision(g: Graph, k: int, *, force: bool = False) -> bool:
    """True iff some deletion set of size at most k works."""
    size, _ = oracle_min(g, force=force)
    return size <= k
