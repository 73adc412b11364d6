"""Evaluate the double-cover connectivity formula, build explicit
separating-set witnesses in the product, and cross-validate everything
against direct computation.

For a graph G the formula says the vertex connectivity of G x K2 equals
min(2*kappa(G), b(G)) where b is the qualifying-pair invariant from
:mod:`kronconn.bpair`. Both sides come with constructive witnesses:
doubling a minimum separating set of G, or placing a minimum pair's X on
single sides via the attachment rule and removing Y from both sides.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable

from .bpair import BPair, b_number
from .connectivity import (
    SeparatingSet,
    is_separating_set,
    kappa_bruteforce,
    kappa_with_witness,
)
from .graph import Graph, GraphError, build_graph, induced_bipartition, is_bipartite, is_connected
from .product import SIDE_A, SIDE_B, cover_index, cover_vertex, double_cover, side_name


@dataclass(frozen=True)
class VerificationReport:
    """Per-instance comparison of formula value, direct product
    connectivity, and witness validity."""

    graph_id: str
    n: int
    m: int
    kappa_g: int
    b_g: int
    formula_value: int
    direct_value: int
    oracle_value: int | None
    witness: SeparatingSet
    witness_valid: bool
    match: bool

    def to_dict(self) -> dict:
        return {
            "graph_id": self.graph_id,
            "n": self.n,
            "m": self.m,
            "kappa_g": self.kappa_g,
            "b_g": self.b_g,
            "formula_value": self.formula_value,
            "direct_value": self.direct_value,
            "oracle_value": self.oracle_value,
            "witness": {
                "vertices": [
                    [u, side_name(side)]
                    for u, side in sorted(
                        cover_vertex(pv) for pv in self.witness.vertices
                    )
                ],
                "host_size": self.witness.host_size,
            },
            "witness_valid": self.witness_valid,
            "match": self.match,
        }


def formula_value(g: Graph) -> int:
    """min(2*kappa(G), b(G)); the pair search is capped at 2*kappa + 1,
    which cannot change the minimum."""
    kappa = kappa_with_witness(g).kappa
    b_val = b_number(g, cap=2 * kappa + 1).value
    return min(2 * kappa, b_val)


def separator_from_cut(g: Graph, cut_vertices: Iterable[int]) -> frozenset[int]:
    """Lift a separating set of G to the product: both sides of every vertex."""
    out = set()
    for u in cut_vertices:
        out.add(cover_index(u, SIDE_A))
        out.add(cover_index(u, SIDE_B))
    return frozenset(out)


def separator_from_bpair(g: Graph, pair: BPair) -> frozenset[int]:
    """Lift a qualifying pair to a product separating set of size |X|+2|Y|.

    With (P, Q) the two-coloring of the pair's component, each x in X is
    removed on side b when it has a neighbor in P and on side a otherwise;
    Y is removed on both sides. Every x must touch the component, which
    holds for canonical pairs by construction.
    """
    parts = induced_bipartition(g, pair.component)
    if parts is None:
        raise GraphError("pair component is not bipartite")
    part_p, _ = parts
    out = set()
    for x in pair.x_set:
        if not g.adj[x] & pair.component:
            raise GraphError(
                f"vertex {x} has no neighbor in the pair component; the "
                "one-sided placement is only defined for canonical pairs"
            )
        side = SIDE_B if g.adj[x] & part_p else SIDE_A
        out.add(cover_index(x, side))
    for y in pair.y_set:
        out.add(cover_index(y, SIDE_A))
        out.add(cover_index(y, SIDE_B))
    return frozenset(out)


def witness_product_separator(g: Graph) -> SeparatingSet:
    """A separating set of the double cover with exactly min(2*kappa, b)
    vertices. Ties between the two constructions go to the doubled cut."""
    kappa, cut = kappa_with_witness(g)
    b_res = b_number(g, cap=2 * kappa + 1)
    if 2 * kappa <= b_res.value:
        vertices = separator_from_cut(g, cut.vertices)
    else:
        vertices = separator_from_bpair(g, b_res.witness)
    return SeparatingSet(vertices, 2 * g.n)


def verify_instance(
    g: Graph,
    with_oracle: bool = False,
    oracle_limit: int = 12,
    graph_id: str | None = None,
) -> VerificationReport:
    """Compute every field of the report; disagreements set match=False
    rather than raising, so the harness reports instead of crashing."""
    kappa, cut = kappa_with_witness(g)
    b_res = b_number(g)
    fv = min(2 * kappa, b_res.value)
    cover = double_cover(g)
    direct = kappa_with_witness(cover).kappa
    oracle = None
    if with_oracle:
        if cover.n > oracle_limit:
            raise GraphError(
                f"oracle requested but the product has {cover.n} vertices, "
                f"limit {oracle_limit}"
            )
        oracle = kappa_bruteforce(cover, limit=oracle_limit)
    if 2 * kappa <= b_res.value:
        w_vertices = separator_from_cut(g, cut.vertices)
    else:
        w_vertices = separator_from_bpair(g, b_res.witness)
    witness = SeparatingSet(w_vertices, cover.n)
    witness_valid = len(w_vertices) == fv and is_separating_set(
        cover, w_vertices
    )
    match = fv == direct and (oracle is None or fv == oracle)
    return VerificationReport(
        graph_id=graph_id if graph_id is not None else f"n{g.n}-m{g.m}",
        n=g.n,
        m=g.m,
        kappa_g=kappa,
        b_g=b_res.value,
        formula_value=fv,
        direct_value=direct,
        oracle_value=oracle,
        witness=witness,
        witness_valid=witness_valid,
        match=match,
    )


def gnp_random(n: int, p: float, seed: int) -> Graph:
    """Erdos-Renyi G(n, p) from a deterministic stream: identical
    (n, p, seed) always yields the identical graph, with edge decisions
    consumed in lexicographic pair order."""
    if n < 1:
        raise GraphError(f"vertex count must be >= 1, got {n}")
    if not 0.0 <= p <= 1.0:
        raise GraphError(f"edge probability must be in [0, 1], got {p}")
    rng = random.Random(seed)
    edges = [
        (u, v)
        for u in range(n - 1)
        for v in range(u + 1, n)
        if rng.random() < p
    ]
    return build_graph(n, edges)


def fuzz_campaign(
    trials: int,
    n_range: tuple[int, int],
    p_choices: Iterable[float],
    master_seed: int,
    oracle_limit: int = 0,
) -> dict:
    """Run verify_instance on ``trials`` random graphs.

    Per-trial seeds derive deterministically from (master_seed, index), so
    the summary is reproducible and independent of execution order. The
    brute-force product oracle is added whenever 2n <= oracle_limit.
    """
    if trials < 1:
        raise GraphError(f"trials must be >= 1, got {trials}")
    n_min, n_max = n_range
    ps = list(p_choices)
    matches = 0
    mismatches = 0
    invalid_witnesses = 0
    bipartite_count = 0
    connected_count = 0
    oracle_checked = 0
    mismatch_reports: list[dict] = []
    for i in range(trials):
        trial_seed = master_seed * 1_000_003 + i
        rng = random.Random(trial_seed)
        n = rng.randint(n_min, n_max)
        p = ps[rng.randrange(len(ps))]
        graph_seed = rng.randrange(1 << 30)
        g = gnp_random(n, p, graph_seed)
        with_oracle = 2 * n <= oracle_limit
        report = verify_instance(
            g,
            with_oracle=with_oracle,
            oracle_limit=oracle_limit,
            graph_id=f"trial{i:04d}-n{n}-p{p}-seed{graph_seed}",
        )
        if report.match:
            matches += 1
        else:
            mismatches += 1
        if not report.witness_valid:
            invalid_witnesses += 1
        if not report.match or not report.witness_valid:
            mismatch_reports.append(report.to_dict())
        if is_bipartite(g):
            bipartite_count += 1
        if is_connected(g):
            connected_count += 1
        if with_oracle:
            oracle_checked += 1
    return {
        "trials": trials,
        "nmin": n_min,
        "nmax": n_max,
        "p_choices": ps,
        "master_seed": master_seed,
        "oracle_limit": oracle_limit,
        "matches": matches,
        "mismatches": mismatches,
        "invalid_witnesses": invalid_witnesses,
        "bipartite": bipartite_count,
        "nonbipartite": trials - bipartite_count,
        "connected": connected_count,
        "disconnected": trials - connected_count,
        "oracle_checked": oracle_checked,
        "mismatch_reports": mismatch_reports,
    }
