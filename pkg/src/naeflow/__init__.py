"""Exact solvers for NAE and 1-in-degree vertex decompositions, zero-sum
edge/vertex flows, NAE edge colorings, and reduction gadget generators."""

from .decomp import (Decomposition, Hypergraph, neighborhood_hypergraph,
                     solve_nae, solve_one_in_degree, solve_one_in_degree_weighted,
                     two_color_hypergraph, verify_nae, verify_one_in_degree,
                     verify_one_in_degree_weighted)
from .edgecolor import (Matching, TwoEdgeColoring, brute_force_nae_edge,
                        nae_edge_coloring, one_in_degree_edge, verify_nae_edge)
from .errors import FormatError, GadgetError, PreconditionError, SolveTimeout
from .flows import (EdgeLabeling, VertexLabeling, decomposition_to_vertex_flow,
                    solve_vertex_zero_sum, solve_zero_sum, verify_vertex_zero_sum,
                    verify_zero_sum, vertex_flow_to_decomposition)
from .formulas import (Assignment, PositiveFormula, TreeLikeInstance,
                       combined_graph, evaluate, incidence_graph, solve_nae as
                       solve_nae_formula, solve_one_in_k, validate_cubic_planar)
from .graph import (Bipartition, CycleClassReport, DegreeProfile, Graph,
                    VertexWeightedGraph, connected_components, degree_profile,
                    euler_tour, has_cycle_2_mod_4, is_bipartite, is_planar,
                    planar_embedding)
from .lp import (FeasibilityResult, LinearSystem, build_nae_system,
                 build_one_in_degree_system, decide_nae_poly,
                 decide_one_in_degree_poly, feasible)

__version__ = "0.1.0"
