"""
Partition Logic Module

Refinement, pasting and horizontal sums of partitions, two-valued states, and
the construction of an automaton from a logic.
"""

from .logic_automaton import automaton_from_logic
from .pasting import (
    atoms,
    element_count,
    elements,
    hasse_diagram,
    horizontal_sum,
    is_boolean,
    leq,
    order,
    paste,
)
from .refinement import maximal_partitions, refines, strictly_refines
from .two_valued_states import atom_values, is_separating, point_induced_states, two_valued_states

__all__ = [
    "atom_values",
    "atoms",
    "automaton_from_logic",
    "element_count",
    "elements",
    "hasse_diagram",
    "horizontal_sum",
    "is_boolean",
    "is_separating",
    "leq",
    "maximal_partitions",
    "order",
    "paste",
    "point_induced_states",
    "refines",
    "strictly_refines",
    "two_valued_states",
]
