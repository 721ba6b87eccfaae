"""Exact metric dimension and threshold dimension of small graphs, with checkable certificates."""

from .embedding import (
    LatticeEmbedding,
    chebyshev_distance,
    embedding_from_resolving_set,
    exists_w_resolved_embedding,
    induced_supergraph,
    lattice_adjacent,
    verify_w_resolved,
)
from .graph import (
    DistanceMatrix,
    Graph,
    GraphError,
    add_edges,
    all_pairs_distances,
    complement_edges,
    diameter,
    k_neighbourhood,
    parse_edge_list,
    parse_graph6,
    write_edge_list,
    write_graph6,
)
from .kernels import IMPLEMENTATION
from .metric import (
    ResolvingCertificate,
    hernando_order_bound,
    is_resolving,
    log_lower_bound,
    metric_dimension_exact,
    neighbourhood_bound_holds,
    neighbourhood_lower_bound,
)
from .reduction import chartrand_edge_bounds_check, reduce_dim4_to_2, reduce_once
from .threshold import (
    EdgeAdditionPlan,
    ThresholdCertificate,
    g_function,
    hernando_tau_lower_bound,
    is_irreducible,
    star_method,
    threshold_via_embeddings,
    threshold_via_supergraphs,
)
from .trees import TreeAnatomy, is_tree, tree_anatomy, tree_basis_with, tree_metric_dimension

__version__ = "0.1.0"
