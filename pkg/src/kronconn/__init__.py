"""kronconn: vertex connectivity of Kronecker double covers.

Computes kappa(G x K2) through the closed form min(2*kappa(G), b(G)),
where b is an exact pair invariant, constructs explicit separating-set
witnesses in the product, and cross-validates every value against
brute-force oracles and direct max-flow computation.
"""

from ._backend import backend_name
from .bpair import (
    BPair,
    BResult,
    CanonicalCost,
    b_bruteforce,
    b_number,
    canonical_cost,
    is_bpair,
)
from .connectivity import (
    CutResult,
    KappaResult,
    SeparatingSet,
    is_separating_set,
    kappa_bruteforce,
    kappa_with_witness,
    min_vertex_cut_pair,
)
from .fileio import EdgeListError, parse_graph, serialize_graph
from .graph import (
    Bipartition,
    Graph,
    GraphError,
    bipartition,
    build_graph,
    components,
    components_excluding,
    induced_bipartition,
    induced_subgraph,
    is_bipartite,
    is_connected,
    open_neighborhood,
)
from .instances import NAMED_GRAPHS
from .product import (
    SIDE_A,
    SIDE_B,
    CoverComponents,
    bipartite_cover_components,
    cover_index,
    cover_vertex,
    double_cover,
    kronecker_product,
    weichsel_connected,
)
from .verify import (
    VerificationReport,
    formula_value,
    fuzz_campaign,
    gnp_random,
    separator_from_bpair,
    separator_from_cut,
    verify_instance,
    witness_product_separator,
)

__version__ = "0.1.0"

__all__ = [
    "BPair",
    "BResult",
    "Bipartition",
    "CanonicalCost",
    "CoverComponents",
    "CutResult",
    "EdgeListError",
    "Graph",
    "GraphError",
    "KappaResult",
    "NAMED_GRAPHS",
    "SIDE_A",
    "SIDE_B",
    "SeparatingSet",
    "VerificationReport",
    "b_bruteforce",
    "b_number",
    "backend_name",
    "bipartite_cover_components",
    "bipartition",
    "build_graph",
    "canonical_cost",
    "components",
    "components_excluding",
    "cover_index",
    "cover_vertex",
    "double_cover",
    "formula_value",
    "fuzz_campaign",
    "gnp_random",
    "induced_bipartition",
    "induced_subgraph",
    "is_bipartite",
    "is_bpair",
    "is_connected",
    "is_separating_set",
    "kappa_bruteforce",
    "kappa_with_witness",
    "kronecker_product",
    "min_vertex_cut_pair",
    "open_neighborhood",
    "parse_graph",
    "separator_from_bpair",
    "separator_from_cut",
    "serialize_graph",
    "verify_instance",
    "weichsel_connected",
    "witness_product_separator",
]
