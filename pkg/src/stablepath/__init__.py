"""Exact independence polynomials, stable-path trees, and certification.

The package computes independence polynomials over arbitrary-precision
integers, builds stable-path trees (ordering-based and deep-decision-based),
decomposes their polynomials into graph factors, and certifies ratio,
divisibility, and real-rootedness identities exactly.
"""

from .poly import (
    NotDivisibleError,
    Poly,
    RealRootSummary,
    exact_div,
    is_log_concave,
    is_real_rooted,
    is_unimodal,
    poly_from_json_dict,
    poly_gcd,
    poly_to_json_dict,
    real_root_summary,
    square_free_part,
    sturm_chain,
)
from .graph import Graph, VertexSubset, format_edge_list, parse_edge_list
from .independence import (
    independence_polynomial,
    independence_polynomial_bruteforce,
)
from .pathtree import (
    DeepDecision,
    FactorList,
    InvalidDecisionError,
    RootedTree,
    divides_tree_polynomial,
    factor_decomposition,
    reconstruct_from_tree,
    sigma_dfs_tree,
    sigma_stable_path_tree,
    stable_path_tree,
    to_dot,
    tree_indpoly,
    tree_isomorphic,
    verify_ratio_identity,
)
from .families import (
    FAMILY_NAMES,
    FamilyGraph,
    FamilySpec,
    fibonacci_weights,
    generate,
)
from .verification import (
    CheckResult,
    ResolvedClaims,
    SUITE_NAMES,
    all_passed,
    format_results,
    random_connected_graph,
    resolve_claims,
    run_all,
    run_suite,
)

__version__ = "0.1.0"

__all__ = [
    "NotDivisibleError",
    "Poly",
    "RealRootSummary",
    "exact_div",
    "is_log_concave",
    "is_real_rooted",
    "is_unimodal",
    "poly_from_json_dict",
    "poly_gcd",
    "poly_to_json_dict",
    "real_root_summary",
    "square_free_part",
    "sturm_chain",
    "Graph",
    "VertexSubset",
    "format_edge_list",
    "parse_edge_list",
    "independence_polynomial",
    "independence_polynomial_bruteforce",
    "DeepDecision",
    "FactorList",
    "InvalidDecisionError",
    "RootedTree",
    "divides_tree_polynomial",
    "factor_decomposition",
    "reconstruct_from_tree",
    "sigma_dfs_tree",
    "sigma_stable_path_tree",
    "stable_path_tree",
    "to_dot",
    "tree_indpoly",
    "tree_isomorphic",
    "verify_ratio_identity",
    "FAMILY_NAMES",
    "FamilyGraph",
    "FamilySpec",
    "fibonacci_weights",
    "generate",
    "CheckResult",
    "ResolvedClaims",
    "SUITE_NAMES",
    "all_passed",
    "format_results",
    "random_connected_graph",
    "resolve_claims",
    "run_all",
    "run_suite",
    "__version__",
]
