"""
Experiments Service

Solves the initial-state determination problem for a single automaton: every
input word splits the states into the classes that would reproduce the same
output sequence. This module computes those partitions, selects the finest ones,
and detects complementary experiments.

Partitions are collected by a breadth-first search over experiment
configurations rather than over words: a configuration is the tuple of current
states (one per candidate initial state) together with the class labels seen so
far. Two words reaching the same configuration induce the same partition and
have the same future, so the search is exact and stays small.

Complementarity is operationalized as: both words induce nontrivial, distinct
partitions and both words are information-destroying (they steer every initial
state into one final state). This is the weakest reading of "different inputs
yield different properties of the initial automaton state while at the same time
steering the automaton into a state which is independent of its initial one".

Dependencies:
- itertools: For word enumeration in length-then-lexicographic order.
- pydantic: For the ExperimentClosure schema.
- loguru: For logging search statistics.
- app.services.automaton_core: For word resolution.
- app.services.partition_logic: For the refinement order and pasting.
- app.core.settings: For the word enumeration guard.

Author: @kcaparas1630
"""
import itertools
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from loguru import logger
from pydantic import BaseModel

from app.core.settings import settings
from app.errors.exceptions import EmptyWordError, GuardExceededError, OutOfRangeError
from app.schemas.automaton import MealyAutomaton, Symbol, Word
from app.schemas.logic import PartitionLogic
from app.schemas.partitions import Partition
from app.services.automaton_core import word_indices
from app.services.partition_logic.pasting import paste
from app.services.partition_logic.refinement import maximal_partitions

# (current state per initial state, canonical class label per initial state)
Configuration = Tuple[Tuple[int, ...], Tuple[int, ...]]


class ExperimentClosure(BaseModel):
    partitions: List[Partition]
    depth: int


def default_depth(automaton: MealyAutomaton) -> int:
    """|S| - 1, the classical distinguishing-word bound."""
    return automaton.n_states - 1


def _initial(automaton: MealyAutomaton) -> Configuration:
    return tuple(range(automaton.n_states)), (0,) * automaton.n_states


def _advance(automaton: MealyAutomaton, config: Configuration, i: int) -> Configuration:
    current, labels = config
    relabel: Dict[Tuple[int, int], int] = {}
    new_labels = []
    for s, label in zip(current, labels):
        key = (label, automaton.lambda_[s][i])
        new_labels.append(relabel.setdefault(key, len(relabel)))
    new_current = tuple(automaton.delta[s][i] for s in current)
    return new_current, tuple(new_labels)


def _partition(automaton: MealyAutomaton, config: Configuration) -> Partition:
    return Partition.from_labels(range(automaton.n_states), config[1])


def partition_for_word(automaton: MealyAutomaton, word: Sequence[Symbol]) -> Partition:
    """
    Group the states by the output sequence the word produces from them.

    Example:
        >>> partition_for_word(mo3, ["1"]).format(mo3.states)
        '{{1},{2,3}}'
    """
    config = _initial(automaton)
    for i in word_indices(automaton, word):
        config = _advance(automaton, config, i)
    return _partition(automaton, config)


def _explore(automaton: MealyAutomaton, max_len: Optional[int]) -> ExperimentClosure:
    start = _initial(automaton)
    visited = {start}
    frontier = [start]
    found: Dict[Partition, None] = {_partition(automaton, start): None}
    depth = 0
    saturated_at = 0
    while frontier and (max_len is None or depth < max_len):
        depth += 1
        next_frontier = []
        for config in frontier:
            for i in range(automaton.n_inputs):
                successor = _advance(automaton, config, i)
                if successor in visited:
                    continue
                visited.add(successor)
                next_frontier.append(successor)
                partition = _partition(automaton, successor)
                if partition not in found:
                    found[partition] = None
                    saturated_at = depth
        frontier = next_frontier
        logger.debug(f"Experiment depth {depth}: {len(frontier)} new configurations, {len(found)} partitions")
    return ExperimentClosure(partitions=list(found), depth=saturated_at)


def experimental_partitions(automaton: MealyAutomaton, max_len: Optional[int] = None) -> List[Partition]:
    """
    All distinct partitions induced by words of length <= max_len.

    Args:
        automaton: The automaton under experiment.
        max_len: Maximal word length; defaults to |S| - 1.

    Returns:
        List[Partition]: canonical partitions in order of discovery (shortest,
        then lexicographically first word), the trivial partition first.
    """
    if max_len is None:
        max_len = default_depth(automaton)
    if max_len < 0:
        raise OutOfRangeError(f"max_len must be non-negative, got {max_len}")
    return _explore(automaton, max_len).partitions


def experiment_closure(automaton: MealyAutomaton) -> ExperimentClosure:
    """
    Every partition any word can induce, with the word length at which the last one first appears.

    The configuration space is finite, so the search terminates.
    """
    closure = _explore(automaton, None)
    logger.info(f"Experiment closure: {len(closure.partitions)} partitions, saturated at depth {closure.depth}")
    return closure


def finest_partitions(automaton: MealyAutomaton, max_len: Optional[int] = None) -> List[Partition]:
    """
    The maximal elements of experimental_partitions under refinement.

    The trivial one-block partition is excluded unless it is the only one.
    """
    partitions = experimental_partitions(automaton, max_len)
    nontrivial = [p for p in partitions if not p.is_trivial()]
    if not nontrivial:
        return partitions
    return maximal_partitions(nontrivial)


def is_information_destroying(automaton: MealyAutomaton, word: Sequence[Symbol]) -> bool:
    """
    True iff the word drives every initial state into one final state.

    Raises:
        EmptyWordError: The empty word steers nothing.
    """
    indices = word_indices(automaton, word)
    if not indices:
        raise EmptyWordError("An empty word does not steer the automaton.")
    current = set(range(automaton.n_states))
    for i in indices:
        current = {automaton.delta[s][i] for s in current}
    return len(current) == 1


def words(n_inputs: int, max_len: int, min_len: int = 0) -> Iterator[Word]:
    """All words over n_inputs symbols, by length and then lexicographically."""
    for length in range(min_len, max_len + 1):
        yield from itertools.product(range(n_inputs), repeat=length)


def word_count(n_inputs: int, max_len: int, min_len: int = 0) -> int:
    return sum(n_inputs**length for length in range(min_len, max_len + 1))


def complementary_pairs(
    automaton: MealyAutomaton,
    max_len: int,
    limit: Optional[int] = None,
) -> List[Tuple[Word, Word]]:
    """
    Unordered pairs of complementary words of length 1..max_len.

    Both words must induce nontrivial, distinct partitions and both must be
    information-destroying. Pairs are ordered by their words (length, then
    lexicographic).

    Raises:
        GuardExceededError: If more than `limit` words would be enumerated.
    """
    if max_len < 1:
        raise OutOfRangeError(f"max_len must be at least 1, got {max_len}")
    if limit is None:
        limit = settings.word_limit
    total = word_count(automaton.n_inputs, max_len, min_len=1)
    if total > limit:
        raise GuardExceededError("Word count", total, limit)

    candidates: List[Tuple[Word, Partition]] = []
    for word in words(automaton.n_inputs, max_len, min_len=1):
        partition = partition_for_word(automaton, word)
        if not partition.is_trivial() and is_information_destroying(automaton, word):
            candidates.append((word, partition))

    pairs = [
        (first, second)
        for (first, p), (second, q) in itertools.combinations(candidates, 2)
        if p != q
    ]
    logger.info(f"Found {len(pairs)} complementary pairs among {len(candidates)} candidate words")
    return pairs


def logic_from_automaton(automaton: MealyAutomaton, max_len: Optional[int] = None) -> PartitionLogic:
    """The automaton partition logic: the pasting of the finest partitions."""
    return paste(tuple(range(automaton.n_states)), finest_partitions(automaton, max_len))
