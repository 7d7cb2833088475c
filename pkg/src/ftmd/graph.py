"""Undirected simple graphs over dense integer vertex ids.

Graphs are immutable after construction and safe to share across threads.
Distances use a distinguished ``None`` for unreachable vertices, never a
large numeric sentinel, so equality tests between distance values stay
meaningful on disconnected graphs.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``0 .. n-1``.

    ``adj[v]`` is the open neighbourhood of ``v``. The constructor rejects
    self-loops, out-of-range ids and asymmetric adjacency.
    """

    n: int
    adj: tuple[frozenset[int], ...]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("vertex count must be non-negative")
        if len(self.adj) != self.n:
            raise ValueError("adjacency length does not match vertex count")
        for u, nbrs in enumerate(self.adj):
            if u in nbrs:
                raise ValueError(f"self-loop at vertex {u}")
            for v in nbrs:
                if not 0 <= v < self.n:
                    raise ValueError(f"neighbour {v} of {u} out of range")
                if u not in self.adj[v]:
                    raise ValueError(f"asymmetric adjacency between {u} and {v}")

    def edges(self) -> list[tuple[int, int]]:
        """All edges as sorted ``(u, v)`` pairs with ``u < v``."""
        return sorted((u, v) for u in range(self.n) for v in self.adj[u] if u < v)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={sum(map(len, self.adj)) // 2})"


@dataclass(frozen=True)
class DistanceRow:
    """Shortest-path distances from ``source``; ``None`` marks unreachable."""

    source: int
    dist: tuple[int | None, ...]


def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph from an edge list; validates ids and forbids loops."""
    adj: list[set[int]] = [set() for _ in range(n)]
    for u, v in edges:
        if u == v:
            raise ValueError(f"self-loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
        adj[u].add(v)
        adj[v].add(u)
    return Graph(n, tuple(frozenset(s) for s in adj))


def complement(g: Graph) -> Graph:
    """Graph with exactly the non-edges of ``g``; an involution."""
    full = frozenset(range(g.n))
    return Graph(g.n, tuple(full - g.adj[v] - {v} for v in range(g.n)))


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    """Disjoint union; the vertices of ``g2`` are shifted up by ``g1.n``."""
    shift = g1.n
    adj = list(g1.adj) + [frozenset(v + shift for v in s) for s in g2.adj]
    return Graph(g1.n + g2.n, tuple(adj))


def bfs_distances(g: Graph, source: int) -> DistanceRow:
    """Exact shortest-path distances from ``source``."""
    if not 0 <= source < g.n:
        raise ValueError(f"source {source} out of range for n={g.n}")
    dist: list[int | None] = [None] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        du = dist[u]
        for v in g.adj[u]:
            if dist[v] is None:
                dist[v] = du + 1
                queue.append(v)
    return DistanceRow(source, tuple(dist))


def connected_components(g: Graph) -> list[frozenset[int]]:
    """Maximal connected vertex sets, ascending by smallest member."""
    seen = [False] * g.n
    components = []
    for start in range(g.n):
        if seen[start]:
            continue
        seen[start] = True
        comp = [start]
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for v in g.adj[u]:
                if not seen[v]:
                    seen[v] = True
                    comp.append(v)
                    queue.append(v)
        components.append(frozenset(comp))
    return components


def induced_subgraph(g: Graph, s: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Subgraph induced by ``s``, reindexed to ``0 .. |s|-1``.

    Returns the subgraph and the old-to-new id map; new ids follow the
    ascending order of the old ones.
    """
    members = sorted(set(s))
    for v in members:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} out of range for n={g.n}")
    old_to_new = {old: new for new, old in enumerate(members)}
    keep = frozenset(members)
    adj = tuple(
        frozenset(old_to_new[x] for x in (g.adj[old] & keep)) for old in members
    )
    return Graph(len(members), adj), old_to_new
