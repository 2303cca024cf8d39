"""Exact Roman and perfect Roman domination on middle graphs."""

from .graph import Graph, MiddleGraph, build_middle_graph, components, family, parse_edge_list, parse_graph6
from .middle import (
    MixedLabeling,
    check_theorem1,
    construct_pmrdf_cycle,
    construct_pmrdf_path,
    gamma_pr_star,
    gamma_r_star,
)
from .roman import Labeling, SolveResult, brute_force_oracle, gamma_pr, gamma_r, solve_by_components

__all__ = [
    "Graph", "MiddleGraph", "build_middle_graph", "components", "family",
    "parse_edge_list", "parse_graph6", "MixedLabeling", "check_theorem1",
    "construct_pmrdf_cycle", "construct_pmrdf_path", "gamma_pr_star", "gamma_r_star",
    "Labeling", "SolveResult", "brute_force_oracle", "gamma_pr", "gamma_r",
    "solve_by_components",
]
