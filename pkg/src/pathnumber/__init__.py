"""Exact path number of undirected graphs, with verifiable witnesses."""

from .estimator import PathNumberEstimator, check_graph, check_graphs
from .graph import (Graph, GraphError, ParseError, components, degree, format_graph,
                    odd_count, parse_graph, remove_paths, strip_isolated, verify_partition)
from .nice import NiceResult, make_nice, replay_witness
from .oracle import brute_pn, gen, sen_bruteforce
from .patterns import Pattern, Var, encode, enumerate_patterns, odd_number, pattern_valid
from .feasibility import FeasibilityWitness, check_feasible, disjoint_paths, realize_family
from .solver import extend_for_witness, path_number, path_partition
from .structures import analyze, classify_component, is_bull_pair
from .subcubic import partition_subcubic, pn_subcubic, reduce_pan_cycle

__version__ = "0.1.0"
