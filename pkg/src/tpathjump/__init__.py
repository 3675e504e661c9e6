"""Disjoint T-path packings, the jump systems of their demand vectors and
the bisubmodular polytopes around them, computed exactly on small graphs."""

from .exchange import (ExchangeError, ExchangeResult, TheoremViolation, certify,
                       exchange_step_edge, exchange_step_generic)
from .graph import (InstanceError, Multigraph, TerminalPartition, augment_with_copies,
                    build_graph, cut_degree, dump_instance, load_instance)
from .greedy import achievable, greedy_optimize
from .jump import (FiniteJumpSystem, Step, Verdict, check_delta_matroid, check_even_sum,
                   check_two_step_axiom, steps_toward)
from .packing import (enumerate_feasible, feasible_box, max_packing, member_via_reduction,
                      realize, reduction_agrees)
from .paths import (EDGE, VERTEX, PathSystem, TPath, Transition, are_disjoint, demand_of,
                    enumerate_t_paths, is_valid_system, transitions_of)
from .polytope import (GuardError, Inequality, IntersectionReport, PairFunction,
                       ReducedInequalitySystem, check_bisubmodular, enumerate_vertices,
                       integer_points, intersect_and_check, intersect_systems,
                       is_jump_on_integer_points, parity_feasibility_check, polytope_member,
                       reduced_inequalities, relaxed_feasible, support_function,
                       support_pair_function)

__version__ = "0.1.0"

__all__ = [
    "EDGE", "VERTEX",
    "ExchangeError", "ExchangeResult", "FiniteJumpSystem", "GuardError", "Inequality",
    "InstanceError", "IntersectionReport", "Multigraph", "PairFunction", "PathSystem",
    "ReducedInequalitySystem", "Step", "TPath", "TerminalPartition", "TheoremViolation",
    "Transition", "Verdict",
    "achievable", "are_disjoint", "augment_with_copies", "build_graph", "certify",
    "check_bisubmodular", "check_delta_matroid", "check_even_sum", "check_two_step_axiom",
    "cut_degree", "demand_of", "dump_instance", "enumerate_feasible", "enumerate_t_paths",
    "enumerate_vertices", "exchange_step_edge", "exchange_step_generic", "feasible_box",
    "greedy_optimize", "integer_points", "intersect_and_check", "intersect_systems",
    "is_jump_on_integer_points", "is_valid_system", "load_instance", "max_packing",
    "member_via_reduction", "parity_feasibility_check", "polytope_member", "realize",
    "reduced_inequalities", "reduction_agrees", "relaxed_feasible", "steps_toward",
    "support_function", "support_pair_function", "transitions_of",
]
