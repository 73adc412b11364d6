"""Vertex connectivity: max-flow computation with witnesses, plus the
exhaustive oracle used to validate it."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple

from ._backend import kernels
from .graph import (
    Graph,
    GraphError,
    bit_adjacency,
    components_excluding,
    csr_adjacency,
    is_connected,
)

BRUTE_FORCE_LIMIT = 12


@dataclass(frozen=True)
class SeparatingSet:
    """A vertex set whose removal disconnects or trivializes a host graph."""

    vertices: frozenset[int]
    host_size: int


def is_separating_set(g: Graph, vertices: Iterable[int]) -> bool:
    """True when deleting ``vertices`` leaves a disconnected graph or a
    single vertex. The empty set qualifies only for disconnected hosts."""
    vs = frozenset(vertices)
    rest = components_excluding(g, vs)
    if len(rest) >= 2:
        return True
    return len(rest) == 1 and len(rest[0]) == 1


class CutResult(NamedTuple):
    size: int
    cut: frozenset[int]


def min_vertex_cut_pair(g: Graph, s: int, t: int) -> CutResult:
    """Minimum set of vertices (excluding s and t) separating s from t.

    Computed as max-flow on the vertex-split digraph: every vertex other
    than s, t carries capacity 1, every edge two high-capacity arcs. The
    returned cut always disconnects s from t and has size equal to the
    max-flow value.
    """
    if not (0 <= s < g.n and 0 <= t < g.n):
        raise GraphError(f"endpoints ({s}, {t}) outside 0..{g.n - 1}")
    if s == t:
        raise GraphError("endpoints must be distinct")
    if g.has_edge(s, t):
        raise GraphError(f"endpoints {s} and {t} are adjacent")
    indptr, nbrs = csr_adjacency(g)
    size, cut_arr = kernels.max_flow_vertex_cut(indptr, nbrs, s, t)
    cut = frozenset(int(v) for v in cut_arr)
    if len(cut) != size:
        raise RuntimeError("max-flow value and extracted cut size disagree")
    comps = components_excluding(g, cut)
    if any(s in c and t in c for c in comps):
        raise RuntimeError("extracted cut fails to separate the endpoints")
    return CutResult(size, cut)


class KappaResult(NamedTuple):
    kappa: int
    witness: SeparatingSet


def kappa_with_witness(g: Graph) -> KappaResult:
    """Vertex connectivity and a witness separating set.

    Disconnected graphs give (0, empty set); the complete graph on n
    vertices gives (n-1, everything but vertex 0). Otherwise the minimum
    over all nonadjacent pairs is taken, ties broken by the
    lexicographically smallest cut.
    """
    if not is_connected(g):
        return KappaResult(0, SeparatingSet(frozenset(), g.n))
    if g.is_complete():
        return KappaResult(
            g.n - 1, SeparatingSet(frozenset(range(1, g.n)), g.n)
        )
    best: tuple[int, tuple[int, ...]] | None = None
    for s in range(g.n):
        for t in range(s + 1, g.n):
            if g.has_edge(s, t):
                continue
            size, cut = min_vertex_cut_pair(g, s, t)
            key = (size, tuple(sorted(cut)))
            if best is None or key < best:
                best = key
    assert best is not None  # noncomplete graphs have a nonadjacent pair
    return KappaResult(best[0], SeparatingSet(frozenset(best[1]), g.n))


def kappa_bruteforce(g: Graph, limit: int = BRUTE_FORCE_LIMIT) -> int:
    """Smallest k such that some k-subset's removal leaves a disconnected
    or single-vertex graph, by exhaustive search over all subsets."""
    if g.n > limit:
        raise GraphError(
            f"exhaustive connectivity limited to {limit} vertices, got {g.n}"
        )
    return kernels.kappa_scan(bit_adjacency(g))
