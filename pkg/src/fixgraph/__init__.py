"""Fixing sets, automorphism groups and composition/corona products of small graphs."""

from .automorphisms import (
    are_isomorphic,
    automorphism_generators,
    canonical_form,
    canonical_labeling,
    is_asymmetric,
    stabilizer,
)
from .fixing import (
    fixing_number,
    fixing_number_disconnected,
    greedy_fixing_set,
    is_fixing_set,
    relative_fixing_set,
)
from .formats import emit_graph6, parse_edge_list, parse_graph6
from .graph import Graph, complete, cycle, empty, from_edges, path, star
from .perm import Permutation, group_order
from .products import composition, corona, corona_iter

__all__ = [
    "Graph", "Permutation", "are_isomorphic", "automorphism_generators", "canonical_form",
    "canonical_labeling", "complete", "composition", "corona", "corona_iter", "cycle", "emit_graph6",
    "empty", "fixing_number", "fixing_number_disconnected", "from_edges", "greedy_fixing_set",
    "group_order", "is_asymmetric", "is_fixing_set", "parse_edge_list", "parse_graph6", "path",
    "relative_fixing_set", "stabilizer", "star",
]
