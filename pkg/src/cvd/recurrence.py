"""Recurrence analysis of the solver's branching vectors.

A branching step that spawns subcases with parameter drops (a_1, ..., a_r)
contributes a factor of x to the search-tree growth, where x is the
largest root of 1 = sum x^(-a_i).  The analysis enumerates every vector
the solver can realise per dispatch case and certifies that all their
roots stay below ROOT_BOUND.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Iterable

#: Certified upper bound on the branching factor: every vector the solver
#: can realise has its recurrence root strictly below this.
ROOT_BOUND = 1.9102

Vector = tuple[int, ...]


@dataclass(frozen=True)
class AnalysisReport:
    """Branching vectors per dispatch case, each with its root, plus the
    overall worst vector."""

    sections: tuple[tuple[str, tuple[tuple[Vector, float], ...]], ...]
    worst_vector: Vector
    worst_root: float


def branching_root(drops: Iterable[int]) -> float:
    """Largest root of 1 = sum x^(-a) over the drops.

    A single-alternative vector contributes no growth, so its root is 1.
    Found by bisection on [1, r] to absolute tolerance 1e-12.
    """
    vec = tuple(sorted(drops))
    if not vec:
        raise ValueError("empty branching vector")
    if any(a < 1 for a in vec):
        raise ValueError(f"branching vector entries must be positive: {vec}")
    if len(vec) == 1:
        return 1.0
    lo, hi = 1.0, float(len(vec))
    while hi - lo > 1e-12:
        mid = (lo + hi) / 2
        if sum(mid ** -a for a in vec) > 1.0:
            lo = mid
        else:
            hi = mid
    return (lo + hi) / 2


def phase_vectors(h: int, cherry_at_root: bool) -> frozenset[Vector]:
    """All branching vectors an expansion can realise before its subcases
    each drop at least h vertices.

    h is the known lower bound on the conflict-graph cover size.  Per
    committed-drop count d the worst steps are: a forced single subcase
    (+1), a 1-vs-3 split, a 2-vs-2 split, or a cherry forest that forces
    h - d independent 1-vs-2 splits at once.  `cherry_at_root` controls
    whether the cherry move is available before anything was dropped;
    the dispatch cases that exclude an initial cherry forest set it False.
    """
    if h not in (1, 2, 3):
        raise ValueError(f"unsupported cover bound {h}")
    out = set(_tail_vectors(0, h))
    if cherry_at_root:
        out.add(_cherry_vector(0, h))
    return frozenset(out)


@lru_cache(maxsize=None)
def _tail_vectors(d: int, h: int) -> frozenset[Vector]:
    if d >= h:
        return frozenset({(d,)})
    out: set[Vector] = set(_tail_vectors(d + 1, h))
    for a in _tail_vectors(d + 1, h):
        for b in _tail_vectors(d + 3, h):
            out.add(tuple(sorted(a + b)))
    halves = _tail_vectors(d + 2, h)
    for a in halves:
        for b in halves:
            out.add(tuple(sorted(a + b)))
    if d > 0:
        out.add(_cherry_vector(d, h))
    return frozenset(out)


def _cherry_vector(d: int, h: int) -> Vector:
    # s independent 1-vs-2 splits: C(s, j) subcases drop d + s + j vertices
    s = h - d
    entries: list[int] = []
    for j in range(s + 1):
        entries.extend([d + s + j] * comb(s, j))
    return tuple(sorted(entries))


def analyze_cases() -> AnalysisReport:
    """Worst-case branching vectors of the three dispatch cases.

    Case 1 realises the plain 1-vs-2 split.  Case 2 runs an expansion
    certified for cover size 2 and appends the (2, 3) follow-up from its
    delete-the-pivot branch.  Case 3 likewise appends the lone drop of the
    deleted pivot to an expansion certified for cover size 3.  The generic
    section is the steady-state 1-vs-2 split that any later cherry forest
    realises.
    """
    case2 = sorted(tuple(sorted(v + (2, 3))) for v in phase_vectors(2, False))
    case3 = sorted(tuple(sorted(v + (1,))) for v in phase_vectors(3, False))
    sections = (
        ("case1", _with_roots([(1, 2)])),
        ("case2", _with_roots(case2)),
        ("case3", _with_roots(case3)),
        ("generic", _with_roots([(1, 2)])),
    )
    worst_vector, worst_root = max(
        (entry for _, entries in sections for entry in entries),
        key=lambda entry: (entry[1], entry[0]),
    )
    return AnalysisReport(sections, worst_vector, worst_root)


def _with_roots(vectors: list[Vector]) -> tuple[tuple[Vector, float], ...]:
    return tuple((vec, branching_root(vec)) for vec in vectors)
