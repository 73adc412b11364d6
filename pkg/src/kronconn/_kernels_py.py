"""Pure-Python kernel implementations.

Twin of :mod:`kronconn._kernels_numba`: identical signatures, identical
algorithms, identical results (including which minimum cut is returned).
Vertex sets are packed into int bitmasks; flow graphs use flat arc arrays.
"""

from __future__ import annotations

import numpy as np


def _component_from(adj: list[int], allowed: int, start: int) -> int:
    """Bitmask of the component of ``start`` inside the ``allowed`` set."""
    comp = 1 << start
    frontier = comp
    while frontier:
        reach = 0
        f = frontier
        while f:
            v = (f & -f).bit_length() - 1
            f &= f - 1
            reach |= adj[v]
        frontier = reach & allowed & ~comp
        comp |= frontier
    return comp


def is_connected_mask(adj_bits: np.ndarray, mask: int) -> bool:
    """True when the induced subgraph on the nonempty ``mask`` is connected."""
    adj = [int(x) for x in adj_bits]
    start = (mask & -mask).bit_length() - 1
    return _component_from(adj, mask, start) == mask


def _is_bipartite_mask(adj: list[int], allowed: int) -> bool:
    """Odd-cycle-free check for the induced subgraph on ``allowed``."""
    remaining = allowed
    while remaining:
        start = (remaining & -remaining).bit_length() - 1
        col_a = 1 << start
        col_b = 0
        frontier = col_a
        side = 0
        while frontier:
            reach = 0
            f = frontier
            while f:
                v = (f & -f).bit_length() - 1
                f &= f - 1
                reach |= adj[v]
            reach &= allowed
            if side == 0:
                if reach & col_a:
                    return False
                frontier = reach & ~col_b
                col_b |= frontier
            else:
                if reach & col_b:
                    return False
                frontier = reach & ~col_a
                col_a |= frontier
            side = 1 - side
        remaining &= ~(col_a | col_b)
    return True


def kappa_scan(adj_bits: np.ndarray) -> int:
    """Smallest k such that deleting some k vertices leaves a disconnected
    or single-vertex graph. Exhaustive over all 2^n deletion sets."""
    adj = [int(x) for x in adj_bits]
    n = len(adj)
    full = (1 << n) - 1
    best = n - 1
    for removed in range(1 << n):
        k = removed.bit_count()
        if k >= best:
            continue
        rest = full & ~removed
        if rest == 0:
            continue
        if rest.bit_count() == 1:
            best = k
        else:
            start = (rest & -rest).bit_length() - 1
            if _component_from(adj, rest, start) != rest:
                best = k
        if best == 0:
            break
    return best


def _valid_bpair_masks(adj: list[int], n: int, x_mask: int, y_mask: int) -> bool:
    """Disjointness and a nonempty remainder are assumed checked by callers
    except for the remainder, which is rechecked here."""
    full = (1 << n) - 1
    rest = full & ~(x_mask | y_mask)
    if rest == 0:
        return False
    remaining = rest
    while remaining:
        start = (remaining & -remaining).bit_length() - 1
        comp = _component_from(adj, rest, start)
        remaining &= ~comp
        if not _is_bipartite_mask(adj, comp):
            continue
        ok = True
        xs = x_mask
        while xs:
            x = (xs & -xs).bit_length() - 1
            xs &= xs - 1
            if not _is_bipartite_mask(adj, comp | (1 << x)):
                ok = False
                break
        if ok:
            return True
    return False


def check_bpair_masks(adj_bits: np.ndarray, x_mask: int, y_mask: int) -> bool:
    """Bitmask transcription of the qualifying-pair conditions: the rest of
    the graph keeps a bipartite component that stays bipartite when any
    single member of X joins it."""
    adj = [int(x) for x in adj_bits]
    if x_mask & y_mask:
        return False
    return _valid_bpair_masks(adj, len(adj), x_mask, y_mask)


def b_scan(adj_bits: np.ndarray) -> int:
    """Minimum of |X| + 2|Y| over all 3^n assignments of vertices to
    X / Y / remainder for which the qualifying-pair conditions hold."""
    adj = [int(x) for x in adj_bits]
    n = len(adj)
    best = 2 * n + 1
    for code in range(3 ** n):
        x_mask = 0
        y_mask = 0
        c = code
        for v in range(n):
            t = c % 3
            c //= 3
            if t == 1:
                x_mask |= 1 << v
            elif t == 2:
                y_mask |= 1 << v
        cost = x_mask.bit_count() + 2 * y_mask.bit_count()
        if cost >= best:
            continue
        if _valid_bpair_masks(adj, n, x_mask, y_mask):
            best = cost
            if best == 0:
                break
    return best


def max_flow_vertex_cut(
    indptr: np.ndarray, nbrs: np.ndarray, s: int, t: int
) -> tuple[int, np.ndarray]:
    """Minimum s-t vertex cut via max-flow on the vertex-split digraph.

    Every vertex v becomes an arc in(v) -> out(v) of capacity 1 (unbounded
    for s and t); every undirected edge becomes two directed arcs of
    capacity well above n. Returns (flow value, cut vertices ascending);
    the cut is the set of split arcs saturated on the source side of the
    final residual graph.
    """
    n = len(indptr) - 1
    big = 4 * n + 4
    num_nodes = 2 * n
    m2 = len(nbrs)  # twice the edge count
    max_arcs = 2 * n + 2 * m2
    arc_to = [0] * max_arcs
    arc_cap = [0] * max_arcs
    head = [-1] * num_nodes
    nxt = [-1] * max_arcs
    count = 0

    def add_arc(u: int, w: int, cap: int) -> None:
        nonlocal count
        arc_to[count] = w
        arc_cap[count] = cap
        nxt[count] = head[u]
        head[u] = count
        count += 1

    for v in range(n):
        cap = big if v == s or v == t else 1
        add_arc(2 * v, 2 * v + 1, cap)  # forward split arc, id 2v
        add_arc(2 * v + 1, 2 * v, 0)
    for u in range(n):
        for i in range(int(indptr[u]), int(indptr[u + 1])):
            w = int(nbrs[i])
            if w > u:
                add_arc(2 * u + 1, 2 * w, big)
                add_arc(2 * w, 2 * u + 1, 0)
                add_arc(2 * w + 1, 2 * u, big)
                add_arc(2 * u, 2 * w + 1, 0)

    source = 2 * s + 1
    sink = 2 * t
    flow = 0
    prev_arc = [-1] * num_nodes
    while True:
        for i in range(num_nodes):
            prev_arc[i] = -1
        prev_arc[source] = -2
        queue = [source]
        qi = 0
        found = False
        while qi < len(queue) and not found:
            u = queue[qi]
            qi += 1
            a = head[u]
            while a != -1:
                if arc_cap[a] > 0 and prev_arc[arc_to[a]] == -1:
                    prev_arc[arc_to[a]] = a
                    if arc_to[a] == sink:
                        found = True
                        break
                    queue.append(arc_to[a])
                a = nxt[a]
        if not found:
            break
        bottleneck = big
        u = sink
        while u != source:
            a = prev_arc[u]
            if arc_cap[a] < bottleneck:
                bottleneck = arc_cap[a]
            u = arc_to[a ^ 1]
        u = sink
        while u != source:
            a = prev_arc[u]
            arc_cap[a] -= bottleneck
            arc_cap[a ^ 1] += bottleneck
            u = arc_to[a ^ 1]
        flow += bottleneck

    cut = [v for v in range(n) if prev_arc[2 * v] != -1 and prev_arc[2 * v + 1] == -1]
    return flow, np.asarray(cut, dtype=np.int32)
