"""Reduction gadget generators with provenance and witness-transfer maps."""

from .base import GadgetInstance, Provenance, gadget_from_dict, gadget_to_dict
from .bipartition import gen_bipartition_instance, min_edge_deletion_bipartition
from .flowgadget import (assignment_from_flow, gen_zero_sum_instance,
                         witness_flow_from_assignment)
from .regular import (assignment_from_decomposition, decomposition_from_assignment,
                      gen_regular_bipartite, pad_formula)
from .threepartition import (coloring_from_partition, gen_three_partition_graph,
                             partition_from_coloring)
from .treelike import make_tree_like

__all__ = [
    "GadgetInstance", "Provenance", "gadget_to_dict", "gadget_from_dict",
    "make_tree_like", "gen_zero_sum_instance", "witness_flow_from_assignment",
    "assignment_from_flow", "pad_formula", "gen_regular_bipartite",
    "decomposition_from_assignment", "assignment_from_decomposition",
    "gen_three_partition_graph", "partition_from_coloring",
    "coloring_from_partition", "gen_bipartition_instance",
    "min_edge_deletion_bipartition",
]
