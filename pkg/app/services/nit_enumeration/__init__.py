"""
Nit Enumeration Module

Complete sets of comeasurable nits, their logic, automaton and tessellations.
"""

from .nit_service import (
    count_formula,
    count_formula_k2,
    enumerate_complete_sets,
    export_sets,
    first_complete_set,
    format_grid,
    guard_product_states,
    is_complete_set,
    iter_complete_sets,
    nit_automaton,
    nit_logic,
    nit_partition_count,
    nit_partitions,
    parse_export,
    permutation_orbit,
    render_tessellation,
    tessellation_grid,
)

__all__ = [
    "count_formula",
    "count_formula_k2",
    "enumerate_complete_sets",
    "export_sets",
    "first_complete_set",
    "format_grid",
    "guard_product_states",
    "is_complete_set",
    "iter_complete_sets",
    "nit_automaton",
    "nit_logic",
    "nit_partition_count",
    "nit_partitions",
    "parse_export",
    "permutation_orbit",
    "render_tessellation",
    "tessellation_grid",
]
