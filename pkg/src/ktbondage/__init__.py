"""Exact total domination and k-total bondage numbers for small graphs."""

__version__ = "0.1.0"

from .bondage import (
    BondageCertificate,
    BondageOutcome,
    bondage_k,
    lower_bound,
    max_achievable_increase,
    sanchis_max_edges,
    verify_certificate,
)
from .domination import (
    DominationCertificate,
    gamma_t,
    greedy_td_upper_bound,
    is_minimal_td_set,
    is_td_set,
)
from .errors import (
    BadParam,
    BondageError,
    ExceedsSearchBudget,
    InvalidVertexIndex,
    IsolatedVertex,
    MissingEdge,
    NotATDSet,
    ParseError,
)
from .generators import ClassSpec, Family
from .graph import (
    EdgeSet,
    Graph,
    components,
    degree,
    has_isolated_vertex,
    is_pendant_edge,
    parse_edge_list,
    remove_edges,
    serialize_edge_list,
    total_degree,
)

__all__ = [
    "BadParam", "BondageCertificate", "BondageError", "BondageOutcome", "ClassSpec",
    "DominationCertificate", "EdgeSet", "ExceedsSearchBudget", "Family", "Graph",
    "InvalidVertexIndex", "IsolatedVertex", "MissingEdge", "NotATDSet", "ParseError",
    "bondage_k", "components", "degree", "gamma_t", "greedy_td_upper_bound",
    "has_isolated_vertex", "is_minimal_td_set", "is_pendant_edge", "is_td_set", "lower_bound",
    "max_achievable_increase", "parse_edge_list", "remove_edges", "sanchis_max_edges",
    "serialize_edge_list", "total_degree", "verify_certificate",
]
