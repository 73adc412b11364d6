"""Named graph constructors used as stable regression anchors."""

from __future__ import annotations

from .graph import Graph, build_graph


def path(n: int) -> Graph:
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycles need at least 3 vertices")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    return build_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def complete_bipartite(a: int, b: int) -> Graph:
    return build_graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def edgeless(n: int) -> Graph:
    return build_graph(n, [])


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return build_graph(10, outer + spokes + inner)


def triangle_pendant() -> Graph:
    """Triangle 0-1-2 with a pendant vertex 3 attached to vertex 2."""
    return build_graph(4, [(0, 1), (1, 2), (2, 0), (2, 3)])


NAMED_GRAPHS = {
    "c5": lambda: cycle(5),
    "k3": lambda: complete(3),
    "k4": lambda: complete(4),
    "petersen": petersen,
    "k33": lambda: complete_bipartite(3, 3),
    "triangle_pendant": triangle_pendant,
}
