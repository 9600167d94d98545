"""
Reversible Automata Service

Automata whose outputs equal their inputs can be read as a single combined map
U:(s, i) -> (δ(s, i), λ(s, i)) on S×I. When U is a bijection the automaton is
reversible: U is a permutation, represented as a 0/1 matrix with
U[image, source] = 1 so that Ψ'_r = Σ_c U[r, c]·Ψ_c evolves one-hot configurations.

Pairs are numbered row-major: (s, i) has index s·|I| + i. Cycle forms use
1-based indices into that order; permutations in one-line form are 0-based.

Dependencies:
- numpy: For permutation matrices and matrix powers.
- loguru: For logging.
- app.schemas.reversible: For CombinedMap and Configuration.

Author: @kcaparas1630
"""
import math
from typing import FrozenSet, List, Optional, Sequence, Tuple

import numpy as np
from loguru import logger

from app.errors.exceptions import NotReversibleError, OutOfRangeError, PermutationSizeError
from app.schemas.automaton import MealyAutomaton
from app.schemas.reversible import CombinedMap, Configuration, Pair
from app.services.automaton_core import build_automaton

Cycle = Tuple[int, ...]
Permutation = Tuple[int, ...]


def combined_map(automaton: MealyAutomaton) -> CombinedMap:
    """
    The map (s, i) -> (δ(s, i), λ(s, i)) over the row-major domain.

    Raises:
        NotReversibleError: If the outputs are not the inputs, in the same order.
    """
    if automaton.outputs != automaton.inputs:
        raise NotReversibleError("outputs ≠ inputs")
    domain = tuple((s, i) for s in range(automaton.n_states) for i in range(automaton.n_inputs))
    image = tuple((automaton.delta[s][i], automaton.lambda_[s][i]) for s, i in domain)
    return CombinedMap(n_states=automaton.n_states, n_inputs=automaton.n_inputs, domain=domain, image=image)


def is_reversible(automaton: MealyAutomaton) -> bool:
    """True iff the combined map is a bijection; raises NotReversibleError when I ≠ O."""
    return combined_map(automaton).is_bijective()


def _permutation(automaton: MealyAutomaton) -> Permutation:
    mapping = combined_map(automaton)
    if not mapping.is_bijective():
        raise NotReversibleError()
    return mapping.as_permutation()


def permutation_matrix(automaton: MealyAutomaton) -> np.ndarray:
    """
    The n×n permutation matrix of a reversible automaton, n = |S|·|I|.

    Example:
        >>> permutation_matrix(swap_reversible).tolist()
        [[0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]]
    """
    permutation = _permutation(automaton)
    n = len(permutation)
    matrix = np.zeros((n, n), dtype=np.int64)
    matrix[list(permutation), np.arange(n)] = 1
    return matrix


def cycles_of(permutation: Sequence[int]) -> List[Cycle]:
    """Disjoint cycles of a 0-based permutation, 1-based, minimum first, sorted, fixed points kept."""
    seen = [False] * len(permutation)
    cycles: List[Cycle] = []
    for start in range(len(permutation)):
        if seen[start]:
            continue
        cycle = []
        x = start
        while not seen[x]:
            seen[x] = True
            cycle.append(x + 1)
            x = permutation[x]
        cycles.append(tuple(cycle))
    # starting from the smallest unseen element already puts the minimum first
    return cycles


def cycle_form(automaton: MealyAutomaton) -> List[Cycle]:
    return cycles_of(_permutation(automaton))


def format_cycles(cycles: Sequence[Cycle]) -> str:
    """Cycle notation, e.g. (1,2)(3,4)."""
    return "".join("(" + ",".join(str(x) for x in cycle) + ")" for cycle in cycles)


def permutation_from_cycles(cycles: Sequence[Sequence[int]], size: int) -> Permutation:
    """
    The 0-based one-line permutation of 1-based cycles; omitted points are fixed.

    Raises:
        OutOfRangeError: If a point is outside 1..size or appears twice.
    """
    image = list(range(size))
    seen = set()
    for cycle in cycles:
        for x in cycle:
            if not 1 <= x <= size or x in seen:
                raise OutOfRangeError(f"Cycle point {x} is repeated or outside 1..{size}")
            seen.add(x)
        for a, b in zip(cycle, list(cycle[1:]) + list(cycle[:1])):
            image[a - 1] = b - 1
    return tuple(image)


def automaton_from_permutation(
    permutation: Sequence[int],
    n_states: int,
    n_inputs: int,
    states: Optional[Sequence[str]] = None,
    inputs: Optional[Sequence[str]] = None,
) -> MealyAutomaton:
    """
    The unique automaton with I = O whose combined map is the given permutation.

    Args:
        permutation: 0-based one-line form; permutation[k] is the image of pair k.
        n_states, n_inputs: |S| and |I|.
        states: State labels, default "1".."|S|".
        inputs: Input (and output) labels, default "0".."|I|-1".

    Raises:
        PermutationSizeError: If len(permutation) ≠ |S|·|I|.
        OutOfRangeError: If the sequence is not a permutation.
    """
    size = len(permutation)
    if size != n_states * n_inputs or size == 0:
        raise PermutationSizeError(size, n_states, n_inputs)
    if sorted(permutation) != list(range(size)):
        raise OutOfRangeError("The sequence is not a permutation of 0..n-1")
    inputs = list(inputs) if inputs is not None else [str(i) for i in range(n_inputs)]
    delta = [[0] * n_inputs for _ in range(n_states)]
    lambda_ = [[0] * n_inputs for _ in range(n_states)]
    for k, target in enumerate(permutation):
        s, i = divmod(k, n_inputs)
        delta[s][i], lambda_[s][i] = divmod(target, n_inputs)
    return build_automaton(
        states=list(states) if states is not None else [str(s + 1) for s in range(n_states)],
        inputs=inputs,
        outputs=inputs,
        delta=delta,
        lambda_=lambda_,
    )


def inverse(automaton: MealyAutomaton) -> MealyAutomaton:
    """The automaton of the inverse permutation, with the same labels."""
    permutation = _permutation(automaton)
    inverted = [0] * len(permutation)
    for source, target in enumerate(permutation):
        inverted[target] = source
    return automaton_from_permutation(
        inverted, automaton.n_states, automaton.n_inputs, automaton.states, automaton.inputs
    )


def permutation_order(automaton: MealyAutomaton) -> int:
    """The least t ≥ 1 after which every configuration returns to itself."""
    return math.lcm(*(len(cycle) for cycle in cycle_form(automaton)))


def evolve(automaton: MealyAutomaton, configuration: Configuration, steps: int) -> Configuration:
    """
    Apply the permutation `steps` times to a one-hot configuration.

    Raises:
        OutOfRangeError: If steps < 0 or the configuration has the wrong length.
    """
    if steps < 0:
        raise OutOfRangeError(f"Step count must be non-negative, got {steps}")
    matrix = permutation_matrix(automaton)
    if len(configuration.vector) != matrix.shape[0]:
        raise OutOfRangeError(
            f"Configuration of length {len(configuration.vector)} for {matrix.shape[0]} pairs"
        )
    evolved = np.linalg.matrix_power(matrix, steps) @ np.array(configuration.vector, dtype=np.int64)
    logger.debug(f"Evolved configuration {configuration.index} over {steps} steps")
    return Configuration(vector=tuple(int(v) for v in evolved))


def combined_image(automaton: MealyAutomaton, steps: int) -> FrozenSet[Pair]:
    """
    The image of S×I under the combined map iterated `steps` times.

    A strict subset means configurations were merged and information was
    destroyed; reversible automata always return the whole of S×I.
    """
    mapping = combined_map(automaton)
    current = set(mapping.domain)
    image = dict(zip(mapping.domain, mapping.image))
    for _ in range(steps):
        current = {image[pair] for pair in current}
    return frozenset(current)
