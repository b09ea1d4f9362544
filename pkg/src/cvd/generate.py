"""Seeded instance generators.

Both models draw edges from a splitmix64 stream, one 64-bit draw per
candidate pair in lexicographic pair order, so a (model, parameters,
seed) triple pins the instance down to the byte.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .graph import Graph

_MASK = (1 << 64) - 1


@dataclass(frozen=True)
class GenSpec:
    """Parameters for one generated instance.

    model "planted": `clusters` disjoint cliques of `size` vertices plus
    `noise` extra vertices, each candidate pair involving a noise vertex
    drawn with probability p.  model "gnp": every pair of the n vertices
    drawn with probability p.
    """

    model: str
    seed: int
    clusters: int = 0
    size: int = 0
    noise: int = 0
    n: int = 0
    p: float = 0.0


class SplitMix64:
    """splitmix64 generator; `draw` yields one 64-bit value."""

    def __init__(self, seed: int):
        self.state = seed & _MASK

    def draw(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
        return z ^ (z >> 31)


def gen_planted(spec: GenSpec) -> Graph:
    """Cliques 1..clusters*size in blocks of `size`, then noise vertices;
    every pair with a noise member is drawn independently."""
    if spec.model != "planted":
        raise ValueError(f"expected a planted spec, got model {spec.model!r}")
    if spec.clusters < 0 or spec.noise < 0 or (spec.clusters > 0 and spec.size < 1):
        raise ValueError("planted model needs clusters >= 0, size >= 1, noise >= 0")
    _check_probability(spec.p)
    core = spec.clusters * spec.size
    n = core + spec.noise
    edges: list[tuple[int, int]] = []
    for c in range(spec.clusters):
        base = c * spec.size
        edges.extend(combinations(range(base + 1, base + spec.size + 1), 2))
    rng = SplitMix64(spec.seed)
    threshold = _threshold(spec.p)
    for i in range(1, n + 1):
        for j in range(max(i + 1, core + 1), n + 1):
            if rng.draw() < threshold:
                edges.append((i, j))
    return Graph.from_edges(range(1, n + 1), edges)


def gen_gnp(spec: GenSpec) -> Graph:
    """Erdos-Renyi style: each of the n-choose-2 pairs drawn independently."""
    if spec.model != "gnp":
        raise ValueError(f"expected a gnp spec, got model {spec.model!r}")
    if spec.n < 0:
        raise ValueError("gnp model needs n >= 0")
    _check_probability(spec.p)
    rng = SplitMix64(spec.seed)
    threshold = _threshold(spec.p)
    edges = [(i, j) for i, j in combinations(range(1, spec.n + 1), 2) if rng.draw() < threshold]
    return Graph.from_edges(range(1, spec.n + 1), edges)


def _check_probability(p: float) -> None:
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"edge probability must lie in [0, 1], got {p}")


def _threshold(p: float) -> int:
    # an edge is present iff the 64-bit draw falls below p * 2^64
    return int(p * 2.0 ** 64)
