"""Weighted domination: exact and randomized solvers, probabilistic upper
bounds, ILP export and random instance generators."""

from .bounds import (
    BoundReport, all_bounds, bound_c4, bound_t1, bound_t2, bound_t3, bound_t5, bound_t6,
    expected_weight,
)
from .exact import (
    ExactResult, RelaxationBounds, exact_solve, reduce_two_objective, relaxation_bounds,
    transform_max_to_min,
)
from .generators import GenSpec, assign_weights, gen_er, gen_sun, generate
from .graph import (
    VertexSet, WeightedGraph, build_graph, is_dominating, is_minimal_dominating, parse_graph,
    serialize_graph, set_weight,
)
from .heuristics import (
    HeuristicConfig, HeuristicRun, greedy_extend, minimal_subset, probabilities, run,
    sample_initial,
)
from .ilp import IlpModel, build_model, write_lp

__version__ = "0.1.0"
