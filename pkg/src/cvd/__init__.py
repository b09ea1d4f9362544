"""Exact cluster vertex deletion.

Delete at most k vertices from a graph so that every remaining connected
component is a clique.  The package bundles a branch-and-reduce decision
solver, a brute-force oracle for cross-checking, seeded instance
generators, and a recurrence analysis of the solver's branching vectors.
"""

from .graph import Graph, GraphFormatError, P3Triple, format_graph, parse_graph
from .preprocess import ComponentClass, classify_component, preprocess
from .conflict import ConflictView, CoverClass, cherry_count, classify_small_cover, conflict_view, distance_sets
from .rules import BranchStep, next_branch_step
from .solver import SearchStats, SolveOutcome, select_case, solve_decision, solve_min
from .oracle import oracle_decision, oracle_min
from .recurrence import AnalysisReport, ROOT_BOUND, analyze_cases, branching_root, phase_vectors
from .generate import GenSpec, gen_gnp, gen_planted

__all__ = [
    "Graph",
    "GraphFormatError",
    "P3Triple",
    "parse_graph",
    "format_graph",
    "ComponentClass",
    "classify_component",
    "preprocess",
    "ConflictView",
    "CoverClass",
    "conflict_view",
    "distance_sets",
    "classify_small_cover",
    "cherry_count",
    "BranchStep",
    "next_branch_step",
    "SearchStats",
    "SolveOutcome",
    "select_case",
    "solve_decision",
    "solve_min",
    "oracle_min",
    "oracle_decision",
    "AnalysisReport",
    "ROOT_BOUND",
    "branching_root",
    "phase_vectors",
    "analyze_cases",
    "GenSpec",
    "gen_planted",
    "gen_gnp",
]
