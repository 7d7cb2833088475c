"""Exact minimum-weight fault-tolerant resolving sets on vertex-weighted cographs."""

from .graph import (
    DistanceRow,
    Graph,
    bfs_distances,
    complement,
    connected_components,
    disjoint_union,
    from_edges,
    induced_subgraph,
)
from .cotree import (
    Complement,
    Cotree,
    EmptyGraphError,
    Leaf,
    NotCographError,
    Union,
    build_cotree,
    complement_node,
    find_induced_p4,
    format_cotree,
    is_normalized,
    leaf_count,
    leaf_labels,
    node_count,
    parse_cotree,
    random_cotree,
    realize,
    relabel,
    union_node,
)
from .resolving import (
    KVertexProfile,
    first_low_h_pair,
    first_unresolved_pair,
    h,
    is_2nr,
    is_fault_tolerant,
    is_k_resolving,
    is_resolving,
    k_vertex_profile,
    state_signature,
)
from .dp import (
    ComponentOutcome,
    Entry,
    SingleVertex,
    Solution,
    dp_complement,
    dp_run,
    dp_union_leaf_leaf,
    dp_union_leaf_table,
    dp_union_table_table,
    entry_vertices,
    extract_connected_min,
    finite_states,
    solve,
    state_index,
    state_tuple,
)
from .oracle import OracleResult, oracle_min_2nr, oracle_min_ft, oracle_min_resolving

__version__ = "0.1.0"

__all__ = [
    "ComponentOutcome",
    "Complement",
    "Cotree",
    "DistanceRow",
    "EmptyGraphError",
    "Entry",
    "Graph",
    "KVertexProfile",
    "Leaf",
    "NotCographError",
    "OracleResult",
    "SingleVertex",
    "Solution",
    "Union",
    "bfs_distances",
    "build_cotree",
    "complement",
    "complement_node",
    "connected_components",
    "disjoint_union",
    "dp_complement",
    "dp_run",
    "dp_union_leaf_leaf",
    "dp_union_leaf_table",
    "dp_union_table_table",
    "entry_vertices",
    "extract_connected_min",
    "find_induced_p4",
    "finite_states",
    "first_low_h_pair",
    "first_unresolved_pair",
    "format_cotree",
    "from_edges",
    "h",
    "induced_subgraph",
    "is_2nr",
    "is_fault_tolerant",
    "is_k_resolving",
    "is_normalized",
    "is_resolving",
    "k_vertex_profile",
    "leaf_count",
    "leaf_labels",
    "node_count",
    "oracle_min_2nr",
    "oracle_min_ft",
    "oracle_min_resolving",
    "parse_cotree",
    "random_cotree",
    "realize",
    "relabel",
    "solve",
    "state_index",
    "state_signature",
    "state_tuple",
    "union_node",
]
