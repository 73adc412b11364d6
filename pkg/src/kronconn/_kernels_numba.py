"""Numba-compiled kernel implementations.

Twin of :mod:`kronconn._kernels_py`; keep the two in lockstep. The test
suite pins result equality (including returned cuts) across backends.
"""

from __future__ import annotations

import numpy as np
from numba import njit


@njit(cache=True)
def _popcount(x):
    c = 0
    while x:
        x &= x - 1
        c += 1
    return c


@njit(cache=True)
def _lowest_bit(x):
    v = 0
    while not (x >> v) & 1:
        v += 1
    return v


@njit(cache=True)
def _component_from(adj, allowed, start):
    comp = 1 << start
    frontier = comp
    while frontier:
        reach = 0
        f = frontier
        while f:
            v = _lowest_bit(f)
            f &= f - 1
            reach |= adj[v]
        frontier = reach & allowed & ~comp
        comp |= frontier
    return comp


@njit(cache=True)
def _is_connected_mask(adj, mask):
    start = _lowest_bit(mask)
    return _component_from(adj, mask, start) == mask


def is_connected_mask(adj_bits: np.ndarray, mask: int) -> bool:
    return bool(_is_connected_mask(adj_bits, mask))


@njit(cache=True)
def _is_bipartite_mask(adj, allowed):
    remaining = allowed
    while remaining:
        start = _lowest_bit(remaining)
        col_a = 1 << start
        col_b = 0
        frontier = col_a
        side = 0
        while frontier:
            reach = 0
            f = frontier
            while f:
                v = _lowest_bit(f)
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


@njit(cache=True)
def _kappa_scan(adj):
    n = adj.shape[0]
    full = (1 << n) - 1
    best = n - 1
    for removed in range(1 << n):
        k = _popcount(removed)
        if k >= best:
            continue
        rest = full & ~removed
        if rest == 0:
            continue
        if _popcount(rest) == 1:
            best = k
        else:
            start = _lowest_bit(rest)
            if _component_from(adj, rest, start) != rest:
                best = k
        if best == 0:
            break
    return best


def kappa_scan(adj_bits: np.ndarray) -> int:
    return int(_kappa_scan(adj_bits))


@njit(cache=True)
def _valid_bpair_masks(adj, n, x_mask, y_mask):
    full = (1 << n) - 1
    rest = full & ~(x_mask | y_mask)
    if rest == 0:
        return False
    remaining = rest
    while remaining:
        start = _lowest_bit(remaining)
        comp = _component_from(adj, rest, start)
        remaining &= ~comp
        if not _is_bipartite_mask(adj, comp):
            continue
        ok = True
        xs = x_mask
        while xs:
            x = _lowest_bit(xs)
            xs &= xs - 1
            if not _is_bipartite_mask(adj, comp | (1 << x)):
                ok = False
                break
        if ok:
            return True
    return False


def check_bpair_masks(adj_bits: np.ndarray, x_mask: int, y_mask: int) -> bool:
    if x_mask & y_mask:
        return False
    return bool(_valid_bpair_masks(adj_bits, adj_bits.shape[0], x_mask, y_mask))


@njit(cache=True)
def _b_scan(adj):
    n = adj.shape[0]
    best = 2 * n + 1
    total = 3 ** n
    for code in range(total):
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
        cost = _popcount(x_mask) + 2 * _popcount(y_mask)
        if cost >= best:
            continue
        if _valid_bpair_masks(adj, n, x_mask, y_mask):
            best = cost
            if best == 0:
                break
    return best


def b_scan(adj_bits: np.ndarray) -> int:
    return int(_b_scan(adj_bits))


@njit(cache=True)
def _max_flow_vertex_cut(indptr, nbrs, s, t):
    n = indptr.shape[0] - 1
    big = 4 * n + 4
    num_nodes = 2 * n
    m2 = nbrs.shape[0]
    max_arcs = 2 * n + 2 * m2
    arc_to = np.empty(max_arcs, dtype=np.int64)
    arc_cap = np.empty(max_arcs, dtype=np.int64)
    head = np.full(num_nodes, -1, dtype=np.int64)
    nxt = np.full(max_arcs, -1, dtype=np.int64)
    count = 0
    for v in range(n):
        cap = big if v == s or v == t else 1
        arc_to[count] = 2 * v + 1
        arc_cap[count] = cap
        nxt[count] = head[2 * v]
        head[2 * v] = count
        count += 1
        arc_to[count] = 2 * v
        arc_cap[count] = 0
        nxt[count] = head[2 * v + 1]
        head[2 * v + 1] = count
        count += 1
    for u in range(n):
        for i in range(indptr[u], indptr[u + 1]):
            w = nbrs[i]
            if w > u:
                arc_to[count] = 2 * w
                arc_cap[count] = big
                nxt[count] = head[2 * u + 1]
                head[2 * u + 1] = count
                count += 1
                arc_to[count] = 2 * u + 1
                arc_cap[count] = 0
                nxt[count] = head[2 * w]
                head[2 * w] = count
                count += 1
                arc_to[count] = 2 * u
                arc_cap[count] = big
                nxt[count] = head[2 * w + 1]
                head[2 * w + 1] = count
                count += 1
                arc_to[count] = 2 * w + 1
                arc_cap[count] = 0
                nxt[count] = head[2 * u]
                head[2 * u] = count
                count += 1

    source = 2 * s + 1
    sink = 2 * t
    flow = 0
    prev_arc = np.empty(num_nodes, dtype=np.int64)
    queue = np.empty(num_nodes, dtype=np.int64)
    while True:
        for i in range(num_nodes):
            prev_arc[i] = -1
        prev_arc[source] = -2
        queue[0] = source
        qlen = 1
        qi = 0
        found = False
        while qi < qlen and not found:
            u = queue[qi]
            qi += 1
            a = head[u]
            while a != -1:
                if arc_cap[a] > 0 and prev_arc[arc_to[a]] == -1:
                    prev_arc[arc_to[a]] = a
                    if arc_to[a] == sink:
                        found = True
                        break
                    queue[qlen] = arc_to[a]
                    qlen += 1
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

    cut_count = 0
    for v in range(n):
        if prev_arc[2 * v] != -1 and prev_arc[2 * v + 1] == -1:
            cut_count += 1
    cut = np.empty(cut_count, dtype=np.int32)
    j = 0
    for v in range(n):
        if prev_arc[2 * v] != -1 and prev_arc[2 * v + 1] == -1:
            cut[j] = v
            j += 1
    return flow, cut


def max_flow_vertex_cut(
    indptr: np.ndarray, nbrs: np.ndarray, s: int, t: int
) -> tuple[int, np.ndarray]:
    flow, cut = _max_flow_vertex_cut(indptr, nbrs, s, t)
    return int(flow), cut
