"""Cycle convexity on finite simple graphs."""

from .convexity import (
    HullTrace,
    hull,
    induces_forest,
    interval_step,
    is_convex,
    is_convexly_independent,
    is_hull_set,
    percolation_time_of_set,
)
from .convexity_number import alpha_ext_p4_laden, con_ext_p4_laden, convexity_number
from .decomposition import NotExtendedP4Laden, decompose, generate_random_ext_p4_laden
from .graph import Graph, GraphError, from_edge_list, induced_subgraph, parse_edge_list
from .oracles import (
    OracleCapExceeded,
    PercolationResult,
    oracle_alpha,
    oracle_convexity_number,
    oracle_max_induced_forest,
    oracle_percolation_time,
)
from .percolation import is_cactus, pn_at_least_2, pn_cactus, pn_decide
from .reductions import (
    assignment_to_witness,
    build_percolation_instance,
    build_thick_spider_instance,
    parse_dimacs_cnf,
)

__all__ = [
    "Graph",
    "GraphError",
    "HullTrace",
    "NotExtendedP4Laden",
    "OracleCapExceeded",
    "PercolationResult",
    "alpha_ext_p4_laden",
    "assignment_to_witness",
    "build_percolation_instance",
    "build_thick_spider_instance",
    "con_ext_p4_laden",
    "convexity_number",
    "decompose",
    "from_edge_list",
    "generate_random_ext_p4_laden",
    "hull",
    "induced_subgraph",
    "induces_forest",
    "interval_step",
    "is_cactus",
    "is_convex",
    "is_convexly_independent",
    "is_hull_set",
    "oracle_alpha",
    "oracle_convexity_number",
    "oracle_max_induced_forest",
    "oracle_percolation_time",
    "parse_dimacs_cnf",
    "parse_edge_list",
    "percolation_time_of_set",
    "pn_at_least_2",
    "pn_cactus",
    "pn_decide",
]
