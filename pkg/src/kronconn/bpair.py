"""The pair invariant behind the double-cover connectivity formula.

A qualifying pair (X, Y) consists of disjoint vertex sets whose removal
leaves a bipartite component W such that W stays bipartite when any single
member of X is added back. Its cost is |X| + 2|Y|; the graph invariant is
the minimum cost over all qualifying pairs.

The search for the minimum relies on a canonical-form reduction: any
qualifying pair with component W is dominated by the pair derived from W
alone, where X collects the neighbors of W whose attachments respect W's
two-coloring and Y collects the rest. Vertices outside N(W) only add cost,
and the one-sided condition forces X's members of N(W) into the canonical
X, so minimizing over connected bipartite vertex sets W is exhaustive.
The definition-literal 3^n scan (``b_bruteforce``) cross-checks this.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple

from ._backend import kernels
from .graph import (
    Graph,
    GraphError,
    _check_vertex_set,
    bit_adjacency,
    components,
    components_excluding,
    induced_bipartition,
    open_neighborhood,
)

BRUTE_FORCE_LIMIT = 10


@dataclass(frozen=True)
class BPair:
    """A validated qualifying pair with its witnessing component."""

    x_set: frozenset[int]
    y_set: frozenset[int]
    component: frozenset[int]
    value: int


def is_bpair(
    g: Graph, x_set: Iterable[int], y_set: Iterable[int]
) -> BPair | None:
    """Validate (X, Y) and return the witnessed pair, or None.

    Overlapping X and Y is a usage error; a pair that merely fails the
    qualifying conditions yields None. Among qualifying components the one
    with the smallest minimum vertex is recorded.
    """
    xs = _check_vertex_set(g, x_set)
    ys = _check_vertex_set(g, y_set)
    if xs & ys:
        raise GraphError(f"X and Y overlap on {sorted(xs & ys)}")
    if len(xs) + len(ys) == g.n:
        return None
    for comp in components_excluding(g, xs | ys):
        if induced_bipartition(g, comp) is None:
            continue
        if all(
            induced_bipartition(g, comp | {x}) is not None for x in xs
        ):
            return BPair(xs, ys, comp, len(xs) + 2 * len(ys))
    return None


class CanonicalCost(NamedTuple):
    cost: int
    x_set: frozenset[int]
    y_set: frozenset[int]


def canonical_cost(g: Graph, w: Iterable[int]) -> CanonicalCost | None:
    """Cheapest qualifying pair whose component is exactly ``w``.

    Defined only when the induced subgraph on w is connected and bipartite
    with parts (P, Q): X holds the outside neighbors attached entirely to P
    or entirely to Q, Y the neighbors attached to both.
    """
    ws = _check_vertex_set(g, w)
    if not ws:
        raise GraphError("canonical cost needs a nonempty vertex set")
    if len(components_excluding(g, frozenset(range(g.n)) - ws)) != 1:
        return None
    parts = induced_bipartition(g, ws)
    if parts is None:
        return None
    part_p, part_q = parts
    xs: set[int] = set()
    ys: set[int] = set()
    for v in open_neighborhood(g, ws):
        inside = g.adj[v] & ws
        if inside & part_p and inside & part_q:
            ys.add(v)
        else:
            xs.add(v)
    return CanonicalCost(len(xs) + 2 * len(ys), frozenset(xs), frozenset(ys))


class BResult(NamedTuple):
    value: int
    witness: BPair


def _mask_set(mask: int) -> frozenset[int]:
    out = set()
    while mask:
        v = (mask & -mask).bit_length() - 1
        mask &= mask - 1
        out.add(v)
    return frozenset(out)


def b_number(g: Graph, cap: int | None = None) -> BResult:
    """Minimum qualifying-pair cost with an achieving witness.

    Enumerates connected bipartite vertex sets by seeded growth (each set
    is visited once, from its minimum vertex) and takes the canonical pair
    of each. Short-circuits at 0 when a whole component is bipartite.

    Ties are broken by smallest component, then lexicographically smallest
    component. ``cap`` is a pruning hint: when the true minimum is below
    cap the result is exact; otherwise some value >= cap is returned with
    a matching valid witness.
    """
    for comp in components(g):
        if induced_bipartition(g, comp) is not None:
            witness = is_bpair(g, frozenset(), frozenset())
            assert witness is not None
            return BResult(0, witness)

    adj = [int(x) for x in bit_adjacency(g)]
    n = g.n
    best_key: tuple[int, int, tuple[int, ...]] | None = None
    best_state: tuple[int, int, int] | None = None  # (w, x, y) masks

    for seed in range(n):
        below = (1 << seed) - 1
        above = ~((below << 1) | 1)
        root = 1 << seed
        stack = [(root, root)]  # (component mask, part-P mask)
        visited = {root}
        while stack:
            w, part_p = stack.pop()
            part_q = w & ~part_p
            nb = 0
            f = w
            while f:
                v = (f & -f).bit_length() - 1
                f &= f - 1
                nb |= adj[v]
            nb &= ~w
            x_mask = 0
            y_mask = 0
            f = nb
            while f:
                v = (f & -f).bit_length() - 1
                f &= f - 1
                inside = adj[v] & w
                if inside & part_p and inside & part_q:
                    y_mask |= 1 << v
                else:
                    x_mask |= 1 << v
            cost = x_mask.bit_count() + 2 * y_mask.bit_count()
            if best_key is None or (cost, w.bit_count()) <= best_key[:2]:
                key = (cost, w.bit_count(), tuple(sorted(_mask_set(w))))
                if best_key is None or key < best_key:
                    best_key = key
                    best_state = (w, x_mask, y_mask)

            # Neighbors below the seed can never join this branch's
            # component, and two-sided neighbors can never join any
            # bipartite superset, so they bound every descendant's cost.
            floor = (x_mask & below).bit_count() + 2 * y_mask.bit_count()
            bound = best_key[0] if cap is None else min(best_key[0], cap)
            if floor > bound:
                continue
            f = x_mask & above
            while f:
                v = (f & -f).bit_length() - 1
                f &= f - 1
                grown = w | (1 << v)
                if grown in visited:
                    continue
                visited.add(grown)
                if adj[v] & part_p:
                    stack.append((grown, part_p))
                else:
                    stack.append((grown, part_p | (1 << v)))

    assert best_key is not None and best_state is not None
    w_mask, x_mask, y_mask = best_state
    witness = BPair(
        _mask_set(x_mask), _mask_set(y_mask), _mask_set(w_mask), best_key[0]
    )
    return BResult(best_key[0], witness)


def b_bruteforce(g: Graph, limit: int = BRUTE_FORCE_LIMIT) -> int:
    """Definition-literal oracle: minimum of |X| + 2|Y| over all 3^n
    assignments of vertices to X / Y / remainder that qualify."""
    if g.n > limit:
        raise GraphError(
            f"exhaustive pair search limited to {limit} vertices, got {g.n}"
        )
    return kernels.b_scan(bit_adjacency(g))
