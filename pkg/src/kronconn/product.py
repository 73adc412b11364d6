"""Kronecker products and the double cover G x K2.

Product vertices are encoded densely: (u, v) in G x H becomes u*|H| + v.
For the double cover the second factor is K2 with sides a=0 and b=1, so
(u, side) becomes 2*u + side.
"""

from __future__ import annotations

from typing import NamedTuple

from .graph import (
    Bipartition,
    Graph,
    GraphError,
    build_graph,
    components,
    is_bipartite,
    is_connected,
)

SIDE_A = 0
SIDE_B = 1

_K2 = build_graph(2, [(0, 1)])


def pair_index(u: int, v: int, h_order: int) -> int:
    """Dense encoding of product vertex (u, v) with |H| = h_order."""
    return u * h_order + v


def unpair_index(pv: int, h_order: int) -> tuple[int, int]:
    return divmod(pv, h_order)


def cover_index(u: int, side: int) -> int:
    """Double-cover encoding: (u, a) -> 2u, (u, b) -> 2u + 1."""
    return 2 * u + side


def cover_vertex(pv: int) -> tuple[int, int]:
    return divmod(pv, 2)


def side_name(side: int) -> str:
    return "ab"[side]


def format_cover_vertex(pv: int) -> str:
    u, side = cover_vertex(pv)
    return f"({u},{side_name(side)})"


def kronecker_product(g: Graph, h: Graph) -> Graph:
    """Graph on |g|*|h| vertices where (u1,v1) ~ (u2,v2) iff u1~u2 and v1~v2."""
    edges = []
    for u1, u2 in g.edges:
        for v1, v2 in h.edges:
            edges.append((pair_index(u1, v1, h.n), pair_index(u2, v2, h.n)))
            edges.append((pair_index(u1, v2, h.n), pair_index(u2, v1, h.n)))
    return build_graph(g.n * h.n, edges)


def double_cover(g: Graph) -> Graph:
    """The product g x K2: two sides, edges only across sides over g's edges."""
    return kronecker_product(g, _K2)


def weichsel_connected(g: Graph, h: Graph) -> bool:
    """Connectivity criterion for products of nontrivial factors: connected
    iff both factors are connected and at least one is nonbipartite."""
    if g.n < 2 or h.n < 2:
        raise GraphError("the connectivity criterion needs nontrivial factors")
    return (
        is_connected(g)
        and is_connected(h)
        and not (is_bipartite(g) and is_bipartite(h))
    )


class CoverComponents(NamedTuple):
    component_one: frozenset[int]
    component_two: frozenset[int]
    iso_one: dict[int, int]
    iso_two: dict[int, int]


def bipartite_cover_components(g: Graph, bip: Bipartition) -> CoverComponents:
    """The two components of the double cover of a connected bipartite graph.

    With bipartition (P, Q), the components are (P x a) u (Q x b) and
    (P x b) u (Q x a); each returned map sends a component's vertices onto g
    and is a graph isomorphism.
    """
    if not is_connected(g):
        raise GraphError("double cover splits only defined for connected graphs")
    part_p, part_q = bip.part_a, bip.part_b
    if part_p | part_q != frozenset(range(g.n)) or part_p & part_q:
        raise GraphError("bipartition does not partition the vertex set")
    for u, v in g.edges:
        if (u in part_p) == (v in part_p):
            raise GraphError(f"edge ({u}, {v}) does not cross the bipartition")

    comp1 = frozenset(
        {cover_index(u, SIDE_A) for u in part_p}
        | {cover_index(u, SIDE_B) for u in part_q}
    )
    comp2 = frozenset(
        {cover_index(u, SIDE_B) for u in part_p}
        | {cover_index(u, SIDE_A) for u in part_q}
    )
    iso1 = {pv: cover_vertex(pv)[0] for pv in comp1}
    iso2 = {pv: cover_vertex(pv)[0] for pv in comp2}
    actual = {c for c in components(double_cover(g))}
    if actual != {comp1, comp2}:
        raise GraphError("double cover did not split into the expected parts")
    return CoverComponents(comp1, comp2, iso1, iso2)
