"""Shared test utilities: independent oracles and corpus generators."""

from __future__ import annotations

import itertools
import random

from kronconn import Graph, build_graph, components_excluding, gnp_random


def all_graphs(n: int):
    """Every labeled simple graph on n vertices."""
    pairs = list(itertools.combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield build_graph(
            n, [pairs[i] for i in range(len(pairs)) if mask >> i & 1]
        )


def random_corpus(count, nmin, nmax, ps, seed):
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        n = rng.randint(nmin, nmax)
        p = ps[rng.randrange(len(ps))]
        out.append(gnp_random(n, p, rng.randrange(1 << 30)))
    return out


def has_odd_cycle(g: Graph) -> bool:
    """Exhaustive odd-cycle search, independent of any two-coloring code.

    Checks every odd-length vertex sequence that closes into a cycle.
    Only usable for small n.
    """
    for k in range(3, g.n + 1, 2):
        for verts in itertools.combinations(range(g.n), k):
            rest = verts[1:]
            for perm in itertools.permutations(rest):
                seq = (verts[0],) + perm
                if all(
                    g.has_edge(seq[i], seq[(i + 1) % k]) for i in range(k)
                ):
                    return True
    return False


def are_isomorphic(g: Graph, h: Graph) -> bool:
    """Backtracking isomorphism test for small graphs."""
    if g.n != h.n or g.m != h.m:
        return False
    if sorted(g.degree(v) for v in range(g.n)) != sorted(
        h.degree(v) for v in range(h.n)
    ):
        return False

    mapping: dict[int, int] = {}
    used: set[int] = set()

    def extend(u: int) -> bool:
        if u == g.n:
            return True
        for w in range(h.n):
            if w in used or h.degree(w) != g.degree(u):
                continue
            ok = True
            for prev, mapped in mapping.items():
                if g.has_edge(u, prev) != h.has_edge(w, mapped):
                    ok = False
                    break
            if ok:
                mapping[u] = w
                used.add(w)
                if extend(u + 1):
                    return True
                del mapping[u]
                used.remove(w)
        return False

    return extend(0)


def brute_min_vertex_cut(g: Graph, s: int, t: int) -> int:
    """Smallest vertex set (avoiding s, t) separating s from t, by
    enumeration in order of size."""
    others = [v for v in range(g.n) if v not in (s, t)]
    for k in range(len(others) + 1):
        for cut in itertools.combinations(others, k):
            comps = components_excluding(g, cut)
            if not any(s in c and t in c for c in comps):
                return k
    raise AssertionError("s and t cannot be separated")


def check_bipartition(g: Graph, part_a, part_b) -> bool:
    if part_a | part_b != frozenset(range(g.n)) or part_a & part_b:
        return False
    return all((u in part_a) != (v in part_a) for u, v in g.edges)
