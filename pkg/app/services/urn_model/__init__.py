"""
Urn Model Module

Generalized urn models and the bijective translations to and from Mealy automata.
"""

from .urn_service import (
    automaton_from_urn,
    lookup,
    roundtrip_check,
    urn_from_automaton,
    urn_logic,
    urn_partitions,
)

__all__ = [
    "automaton_from_urn",
    "lookup",
    "roundtrip_check",
    "urn_from_automaton",
    "urn_logic",
    "urn_partitions",
]
