"""Immutable simple undirected graphs on dense integer vertices.

Graphs live on vertex set 0..n-1 with set-based adjacency. All operations
are pure functions; instances are hashable and safe to share across threads.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable

import numpy as np

# Bitmask kernels pack vertex sets into a single int64, which caps them at
# 62 usable bits (the sign bit stays clear).
BITMASK_MAX_VERTICES = 62


class GraphError(ValueError):
    """A graph construction or query violated the domain rules."""


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph: no loops, no parallel edges.

    ``edges`` holds normalized pairs (u, v) with u < v; ``adj`` is the
    per-vertex neighbor set derived from them.
    """

    n: int
    edges: frozenset[tuple[int, int]]
    adj: tuple[frozenset[int], ...] = field(repr=False)

    @property
    def m(self) -> int:
        return len(self.edges)

    def vertices(self) -> range:
        return range(self.n)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def min_degree(self) -> int:
        return min(len(nbrs) for nbrs in self.adj)

    def edge_list(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def is_complete(self) -> bool:
        return self.m == self.n * (self.n - 1) // 2


@dataclass(frozen=True)
class Bipartition:
    """A two-part vertex partition in which every edge crosses parts.

    Either part may be empty: single-vertex and edgeless graphs count as
    bipartite, with isolated vertices placed in ``part_a``.
    """

    part_a: frozenset[int]
    part_b: frozenset[int]


def build_graph(n: int, edge_list: Iterable[tuple[int, int]]) -> Graph:
    """Construct a validated Graph from a vertex count and edge pairs.

    Rejects n < 1, loops, endpoints outside 0..n-1, and duplicate edges
    (in either orientation). Input edge order is irrelevant to the result.
    """
    if n < 1:
        raise GraphError(f"vertex count must be >= 1, got {n}")
    seen: set[tuple[int, int]] = set()
    nbrs: list[set[int]] = [set() for _ in range(n)]
    for u, v in edge_list:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise GraphError(f"loop ({u}, {v}) is not allowed")
        key = (u, v) if u < v else (v, u)
        if key in seen:
            raise GraphError(f"duplicate edge ({u}, {v})")
        seen.add(key)
        nbrs[u].add(v)
        nbrs[v].add(u)
    return Graph(n, frozenset(seen), tuple(frozenset(s) for s in nbrs))


def _check_vertex_set(g: Graph, w: Iterable[int]) -> frozenset[int]:
    ws = frozenset(w)
    bad = [v for v in ws if not (0 <= v < g.n)]
    if bad:
        raise GraphError(f"vertices {sorted(bad)} outside 0..{g.n - 1}")
    return ws


def components(g: Graph) -> list[frozenset[int]]:
    """Connected components as vertex sets, ordered by minimum vertex."""
    return components_excluding(g, frozenset())


def components_excluding(g: Graph, removed: Iterable[int]) -> list[frozenset[int]]:
    """Components of the graph with ``removed`` vertices deleted.

    Equivalent to components(induced subgraph on the rest) but keeps
    original labels. Returns [] when nothing remains.
    """
    gone = _check_vertex_set(g, removed)
    seen: set[int] = set(gone)
    out: list[frozenset[int]] = []
    for s in range(g.n):
        if s in seen:
            continue
        comp = {s}
        queue = deque([s])
        seen.add(s)
        while queue:
            u = queue.popleft()
            for v in g.adj[u]:
                if v not in seen:
                    seen.add(v)
                    comp.add(v)
                    queue.append(v)
        out.append(frozenset(comp))
    return out


def is_connected(g: Graph) -> bool:
    return len(components(g)) == 1


def induced_bipartition(
    g: Graph, w: Iterable[int]
) -> tuple[frozenset[int], frozenset[int]] | None:
    """Two-color the subgraph induced on ``w`` without relabeling.

    Returns (part_a, part_b) with the minimum vertex of every component in
    part_a, or None when the induced subgraph contains an odd cycle.
    """
    ws = _check_vertex_set(g, w)
    color: dict[int, int] = {}
    for s in sorted(ws):
        if s in color:
            continue
        color[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for v in g.adj[u]:
                if v not in ws:
                    continue
                if v not in color:
                    color[v] = 1 - color[u]
                    queue.append(v)
                elif color[v] == color[u]:
                    return None
    part_a = frozenset(v for v, c in color.items() if c == 0)
    return part_a, frozenset(ws - part_a)


def bipartition(g: Graph) -> Bipartition | None:
    """Bipartition of the whole graph, or None if an odd cycle exists.

    Deterministic tie-break: for every component, the part containing its
    smallest vertex goes to part_a.
    """
    parts = induced_bipartition(g, range(g.n))
    if parts is None:
        return None
    return Bipartition(parts[0], parts[1])


def is_bipartite(g: Graph) -> bool:
    return bipartition(g) is not None


def induced_subgraph(g: Graph, w: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Subgraph induced on ``w`` relabeled to 0..|w|-1, plus the old-to-new map."""
    ws = _check_vertex_set(g, w)
    if not ws:
        raise GraphError("induced subgraph needs a nonempty vertex set")
    order = sorted(ws)
    index = {v: i for i, v in enumerate(order)}
    edges = [
        (index[u], index[v]) for (u, v) in g.edges if u in ws and v in ws
    ]
    return build_graph(len(order), edges), index


def open_neighborhood(g: Graph, w: Iterable[int]) -> frozenset[int]:
    """Vertices outside ``w`` with at least one neighbor inside it."""
    ws = _check_vertex_set(g, w)
    out: set[int] = set()
    for u in ws:
        out.update(g.adj[u])
    return frozenset(out - ws)


def bit_adjacency(g: Graph) -> np.ndarray:
    """Adjacency as one int64 neighbor bitmask per vertex (n <= 62)."""
    if g.n > BITMASK_MAX_VERTICES:
        raise GraphError(
            f"bitmask representation supports at most {BITMASK_MAX_VERTICES} "
            f"vertices, got {g.n}"
        )
    bits = np.zeros(g.n, dtype=np.int64)
    for u, v in g.edges:
        bits[u] |= 1 << v
        bits[v] |= 1 << u
    return bits


def csr_adjacency(g: Graph) -> tuple[np.ndarray, np.ndarray]:
    """Adjacency in CSR form: (indptr[n+1], sorted neighbor list) as int32."""
    indptr = np.zeros(g.n + 1, dtype=np.int32)
    for v in range(g.n):
        indptr[v + 1] = indptr[v] + g.degree(v)
    nbrs = np.empty(indptr[-1], dtype=np.int32)
    for v in range(g.n):
        nbrs[indptr[v]:indptr[v + 1]] = sorted(g.adj[v])
    return indptr, nbrs
