"""General Sombor / KA degree-based indices, their inequalities, and extremal search."""

from .graph import (
    DegreeStats,
    Graph,
    GraphError,
    ParseError,
    add_edge,
    canonical_form,
    degree_stats,
    from_edge_list,
    parse_edge_list,
    parse_graph6,
    predicates,
    to_graph6,
)
from .indices import DomainError, IndexSpec, IndexValue, isi, ka, ka_reduced, named_index, vertex_index
from .inequalities import CATALOG, CheckResult, Verdict, run_suite
from .extremal import ExtremalReport, GraphClass, enumerate_graphs, optimize, verify_edge_monotonicity, verify_extremal_claims

__version__ = "0.1.0"
