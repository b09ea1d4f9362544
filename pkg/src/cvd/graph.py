"""Simple undirected graphs with stable integer vertex ids.

Graphs are immutable once built.  Vertex deletion returns a new graph and
keeps the surviving ids unchanged, so a vertex keeps its identity across
the whole life of a search.  File I/O uses a DIMACS-like edge format:

    c optional comment lines
    p edge <n> <m>
    e <u> <v>        (m lines, 1-based endpoints, u != v, no duplicates)
"""

from __future__ import annotations

from typing import Iterable, NamedTuple


class GraphFormatError(ValueError):
    """Raised for malformed graph files; the message names the bad line."""


class P3Triple(NamedTuple):
    """An induced path u-v-w: edges uv and vw present, uw absent."""

    u: int
    v: int
    w: int


class Graph:
    """Undirected simple graph over integer vertex ids."""

    __slots__ = ("_adj",)

    def __init__(self, adj: dict[int, frozenset[int]]):
        self._adj = adj

    @classmethod
    def from_edges(cls, vertices: Iterable[int], edges: Iterable[tuple[int, int]]) -> "Graph":
        """Build a graph from a vertex collection and an edge list.

        Raises ValueError on self-loops, duplicate edges, or edge endpoints
        not listed in `vertices`.
        """
        building: dict[int, set[int]] = {v: set() for v in vertices}
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if u not in building or v not in building:
                raise ValueError(f"edge ({u}, {v}) has an endpoint outside the vertex set")
            if v in building[u]:
                raise ValueError(f"duplicate edge ({u}, {v})")
            building[u].add(v)
            building[v].add(u)
        return cls({v: frozenset(nbrs) for v, nbrs in building.items()})

    @property
    def n(self) -> int:
        return len(self._adj)

    @property
    def m(self) -> int:
        return sum(len(nbrs) for nbrs in self._adj.values()) // 2

    @property
    def vertices(self) -> frozenset[int]:
        return frozenset(self._adj)

    def __contains__(self, v: int) -> bool:
        return v in self._adj

    def neighbors(self, v: int) -> frozenset[int]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj.get(u, ())

    def edge_list(self) -> list[tuple[int, int]]:
        """All edges as (u, v) pairs with u < v, sorted."""
        out = []
        for u in sorted(self._adj):
            for v in self._adj[u]:
                if u < v:
                    out.append((u, v))
        out.sort()
        return out

    def delete_vertices(self, removed: Iterable[int]) -> "Graph":
        """Induced subgraph after deleting `removed`; this graph is untouched."""
        gone = frozenset(removed)
        for v in gone:
            if v not in self._adj:
                raise ValueError(f"cannot delete vertex {v}: not in graph")
        return Graph({v: nbrs - gone for v, nbrs in self._adj.items() if v not in gone})

    def components(self) -> list[frozenset[int]]:
        """Connected components, ordered by their smallest vertex id."""
        seen: set[int] = set()
        comps: list[frozenset[int]] = []
        for start in sorted(self._adj):
            if start in seen:
                continue
            comp = {start}
            frontier = [start]
            while frontier:
                x = frontier.pop()
                for y in self._adj[x]:
                    if y not in comp:
                        comp.add(y)
                        frontier.append(y)
            seen |= comp
            comps.append(frozenset(comp))
        return comps

    def find_p3(self, within: Iterable[int] | None = None) -> P3Triple | None:
        """First induced P3, or None if there is none.

        Deterministic choice: the triple minimising (v, u, w) lexicographically,
        where v is the middle vertex and u < w.  `within` restricts the search
        to the induced subgraph on that vertex set.
        """
        if within is None:
            pool = sorted(self._adj)
            allowed = None
        else:
            allowed = set(within)
            pool = sorted(allowed)
        for v in pool:
            nbrs = self._adj[v]
            if allowed is not None:
                nbrs = nbrs & allowed
            ordered = sorted(nbrs)
            for i, u in enumerate(ordered):
                missing = self._adj[u]
                for w in ordered[i + 1:]:
                    if w not in missing:
                        return P3Triple(u, v, w)
        return None

    def is_cluster_graph(self, within: Iterable[int] | None = None) -> bool:
        """True iff every connected component is a clique (no induced P3)."""
        if within is None:
            return all(self._component_is_clique(c) for c in self.components())
        allowed = set(within)
        seen: set[int] = set()
        for start in sorted(allowed):
            if start in seen:
                continue
            comp = {start}
            frontier = [start]
            while frontier:
                x = frontier.pop()
                for y in self._adj[x] & allowed:
                    if y not in comp:
                        comp.add(y)
                        frontier.append(y)
            seen |= comp
            want = len(comp) - 1
            if any(len(self._adj[x] & allowed) != want for x in comp):
                return False
        return True

    def _component_is_clique(self, comp: frozenset[int]) -> bool:
        want = len(comp) - 1
        return all(len(self._adj[x]) == want for x in comp)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._adj == other._adj

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def parse_graph(text: str) -> Graph:
    """Parse the edge format described in the module docstring.

    Raises GraphFormatError with a line number for malformed input:
    bad or missing header, out-of-range endpoints, self-loops, duplicate
    edges, or an edge count that disagrees with the header.
    """
    n = -1
    m = -1
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        fields = line.split()
        if fields[0] == "p":
            if n >= 0:
                raise GraphFormatError(f"line {lineno}: second header")
            if len(fields) != 4 or fields[1] != "edge":
                raise GraphFormatError(f"line {lineno}: malformed header {line!r}")
            try:
                n, m = int(fields[2]), int(fields[3])
            except ValueError:
                raise GraphFormatError(f"line {lineno}: malformed header {line!r}") from None
            if n < 0 or m < 0:
                raise GraphFormatError(f"line {lineno}: negative count in header")
        elif fields[0] == "e":
            if n < 0:
                raise GraphFormatError(f"line {lineno}: edge before header")
            if len(fields) != 3:
                raise GraphFormatError(f"line {lineno}: malformed edge line {line!r}")
            try:
                u, v = int(fields[1]), int(fields[2])
            except ValueError:
                raise GraphFormatError(f"line {lineno}: malformed edge line {line!r}") from None
            if not (1 <= u <= n and 1 <= v <= n):
                raise GraphFormatError(f"line {lineno}: endpoint out of range in {line!r}")
            if u == v:
                raise GraphFormatError(f"line {lineno}: self-loop at vertex {u}")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise GraphFormatError(f"line {lineno}: duplicate edge ({u}, {v})")
            seen.add(key)
            edges.append(key)
        else:
            raise GraphFormatError(f"line {lineno}: unrecognised line {line!r}")
    if n < 0:
        raise GraphFormatError("missing 'p edge' header")
    if len(edges) != m:
        raise GraphFormatError(f"header announced {m} edges, found {len(edges)}")
    return Graph.from_edges(range(1, n + 1), edges)


def format_graph(g: Graph) -> str:
    """Serialise to the edge format; inverse of parse_graph.

    Requires vertex ids to be exactly 1..n (always true for parsed or
    generated graphs; graphs that went through deletions may not qualify).
    """
    n = g.n
    if g.vertices != frozenset(range(1, n + 1)):
        raise ValueError("can only serialise graphs with vertex ids 1..n")
    lines = [f"p edge {n} {g.m}"]
    lines.extend(f"e {u} {v}" for u, v in g.edge_list())
    return "\n".join(lines) + "\n"
