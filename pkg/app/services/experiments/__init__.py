"""
Experiments Module

State partitions induced by input words, finest partitions and complementarity.
"""

from .experiments_service import (
    ExperimentClosure,
    complementary_pairs,
    default_depth,
    experiment_closure,
    experimental_partitions,
    finest_partitions,
    is_information_destroying,
    logic_from_automaton,
    partition_for_word,
    word_count,
    words,
)

__all__ = [
    "ExperimentClosure",
    "complementary_pairs",
    "default_depth",
    "experiment_closure",
    "experimental_partitions",
    "finest_partitions",
    "is_information_destroying",
    "logic_from_automaton",
    "partition_for_word",
    "word_count",
    "words",
]
