"""domlab: exact graph domination over Cartesian products, with receipts.

The package computes exact domination numbers (two independent solvers),
builds Cartesian products, and mechanically verifies the counting argument
behind the lower bound

    gamma(G x H) >= (gamma(G) * gamma(H) + max(gamma(G), gamma(H))) / 2

on concrete instances: every named set of the argument is materialized and
every inequality is checked, so a passing pair comes with a replayable
proof trace rather than a bare boolean.  A sweep harness runs this over
graph corpora, and the `domlab` CLI exposes the whole thing.
"""

from .errors import (
    BadEdgeError,
    BadParameterError,
    BadVertexError,
    BudgetExhaustedError,
    DomLabError,
    EmptyGraphError,
    Graph6Error,
    NotDominatingError,
    ProjectionNotMinimalError,
    SizeOverflowError,
    TooLargeError,
)
from .graph6 import (
    encode_graph6,
    format_edge_list,
    parse_edge_list,
    parse_graph6,
    parse_graph6_lines,
    read_graph6_file,
)
from .graphs import (
    MAX_PRODUCT_VERTICES,
    Graph,
    ProductGraph,
    VertexSet,
    cartesian_product,
    closed_neighborhood,
    closed_neighborhood_set,
    complete,
    cycle,
    grid,
    is_connected,
    is_dominating,
    make_graph,
    path,
    random_gnp,
    star,
)
from .harness import (
    CSV_COLUMNS,
    PairReport,
    RemarkReport,
    SweepResult,
    all_pairs,
    check_pair,
    enumerate_connected_graphs,
    inject_fault,
    pair_report_dict,
    pair_report_row,
    remark_search,
    sweep,
    zip_pairs,
)
from .solver import (
    DominationResult,
    MinimumSetEnumeration,
    SolverLimits,
    enumerate_minimum_dominating_sets,
    gamma_bb,
    gamma_oracle,
    gamma_restricted,
    is_minimal_dominating,
    shrink_to_minimal,
)
from .trace import (
    CheckResult,
    ProofTrace,
    RemarkVerdict,
    TraceVerdict,
    build_partition,
    build_trace,
    check_to_dict,
    contradiction_witness,
    format_check,
    project_onto_G,
    project_onto_H,
    remark_trace,
    trace_report,
    verify_trace,
)

__version__ = "0.1.0"

__all__ = [
    "BadEdgeError",
    "BadParameterError",
    "BadVertexError",
    "BudgetExhaustedError",
    "CSV_COLUMNS",
    "CheckResult",
    "DomLabError",
    "DominationResult",
    "EmptyGraphError",
    "Graph",
    "Graph6Error",
    "MAX_PRODUCT_VERTICES",
    "MinimumSetEnumeration",
    "NotDominatingError",
    "PairReport",
    "ProductGraph",
    "ProjectionNotMinimalError",
    "ProofTrace",
    "RemarkReport",
    "RemarkVerdict",
    "SizeOverflowError",
    "SolverLimits",
    "SweepResult",
    "TooLargeError",
    "TraceVerdict",
    "VertexSet",
    "all_pairs",
    "build_partition",
    "build_trace",
    "cartesian_product",
    "check_pair",
    "check_to_dict",
    "closed_neighborhood",
    "closed_neighborhood_set",
    "complete",
    "contradiction_witness",
    "cycle",
    "encode_graph6",
    "enumerate_connected_graphs",
    "enumerate_minimum_dominating_sets",
    "format_check",
    "format_edge_list",
    "gamma_bb",
    "gamma_oracle",
    "gamma_restricted",
    "grid",
    "inject_fault",
    "is_connected",
    "is_dominating",
    "is_minimal_dominating",
    "make_graph",
    "pair_report_dict",
    "pair_report_row",
    "parse_edge_list",
    "parse_graph6",
    "parse_graph6_lines",
    "path",
    "project_onto_G",
    "project_onto_H",
    "random_gnp",
    "read_graph6_file",
    "remark_search",
    "remark_trace",
    "shrink_to_minimal",
    "star",
    "sweep",
    "trace_report",
    "verify_trace",
    "zip_pairs",
]
