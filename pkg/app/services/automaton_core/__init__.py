"""
Automaton Core Module

Deterministic Mealy automata and their step/run semantics.
"""

from .automaton_service import (
    ValidationResult,
    build_automaton,
    final_state,
    input_index,
    run,
    state_index,
    step,
    validate,
    word_indices,
)

__all__ = [
    "ValidationResult",
    "build_automaton",
    "final_state",
    "input_index",
    "run",
    "state_index",
    "step",
    "validate",
    "word_indices",
]
