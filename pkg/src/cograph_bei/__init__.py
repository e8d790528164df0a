"""Cographs and the regularity of their binomial edge ideals.

Recognition with induced-P4 certificates, exact regularity by cotree
recursion, every known upper bound with exhaustive verification on all
small cographs, and exact Hilbert series arithmetic for free-vertex
gluings.
"""

from .graph import (
    Graph,
    GraphParseError,
    complement,
    complete_graph,
    connected_components,
    cycle_graph,
    disjoint_union,
    empty_graph,
    graph_from_json_dict,
    graph_to_json_dict,
    induced_subgraph,
    is_complete,
    is_connected,
    join,
    max_degree,
    parse_graph,
    path_graph,
    serialize_graph,
    to_edgelist,
    to_graph6,
)
from .cotree import (
    Cotree,
    CotreeError,
    Join,
    Leaf,
    P4Witness,
    Union,
    build_cotree,
    canonical_key,
    cotree_from_json_dict,
    cotree_leaves,
    cotree_size,
    cotree_to_graph,
    cotree_to_json_dict,
    find_induced_p4,
    is_simplicial,
)
from .invariants import (
    InvariantReport,
    alpha_cotree,
    count_max_cliques_cotree,
    count_max_indep_cotree,
    oracle_longest_induced_path,
    oracle_maximal_independent_sets,
)
from .regularity import (
    NotACographError,
    RegularityReport,
    bounds_report,
    has_universal_vertex,
    is_extremal_characterized,
    order_bound,
    reg_cograph,
)
from .extremal import cone, connected_with_reg, max_reg_cograph
from .series import (
    ChainReport,
    HilbertSeries,
    IntPoly,
    build_chain,
    counterexample_base,
    glue_graphs,
    poly_mul,
    series_glue,
)
from .enumeration import (
    BoundTable,
    CheckResult,
    VerificationReport,
    bound_comparison_table,
    enumerate_cotrees,
    p4_free_classes_by_exhaustion,
    verify_theorems,
)

__version__ = "0.1.0"

__all__ = [
    "BoundTable",
    "ChainReport",
    "CheckResult",
    "Cotree",
    "CotreeError",
    "Graph",
    "GraphParseError",
    "HilbertSeries",
    "IntPoly",
    "InvariantReport",
    "Join",
    "Leaf",
    "NotACographError",
    "P4Witness",
    "RegularityReport",
    "Union",
    "VerificationReport",
    "alpha_cotree",
    "bound_comparison_table",
    "bounds_report",
    "build_chain",
    "build_cotree",
    "canonical_key",
    "complement",
    "complete_graph",
    "cone",
    "connected_components",
    "connected_with_reg",
    "count_max_cliques_cotree",
    "count_max_indep_cotree",
    "counterexample_base",
    "cotree_from_json_dict",
    "cotree_leaves",
    "cotree_size",
    "cotree_to_graph",
    "cotree_to_json_dict",
    "cycle_graph",
    "disjoint_union",
    "empty_graph",
    "enumerate_cotrees",
    "find_induced_p4",
    "glue_graphs",
    "graph_from_json_dict",
    "graph_to_json_dict",
    "has_universal_vertex",
    "induced_subgraph",
    "is_complete",
    "is_connected",
    "is_extremal_characterized",
    "is_simplicial",
    "join",
    "max_degree",
    "max_reg_cograph",
    "oracle_longest_induced_path",
    "oracle_maximal_independent_sets",
    "order_bound",
    "p4_free_classes_by_exhaustion",
    "parse_graph",
    "path_graph",
    "poly_mul",
    "reg_cograph",
    "serialize_graph",
    "series_glue",
    "to_edgelist",
    "to_graph6",
    "verify_theorems",
]
