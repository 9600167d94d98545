"""
Reversible Automata Module

Permutation view of automata with equal input and output alphabets.
"""

from .reversible_service import (
    automaton_from_permutation,
    combined_image,
    combined_map,
    cycle_form,
    cycles_of,
    evolve,
    format_cycles,
    inverse,
    is_reversible,
    permutation_from_cycles,
    permutation_matrix,
    permutation_order,
)

__all__ = [
    "automaton_from_permutation",
    "combined_image",
    "combined_map",
    "cycle_form",
    "cycles_of",
    "evolve",
    "format_cycles",
    "inverse",
    "is_reversible",
    "permutation_from_cycles",
    "permutation_matrix",
    "permutation_order",
]
