"""
Two-Valued States Service

Enumerates the two-valued states of a partition logic and checks whether a
family of states separates the atoms.

A two-valued state picks exactly one true block per context. In a pasted logic
it must also give equal values to every pair of elements (unions of blocks)
that are equal as subsets of the ground, even when they come from different
contexts. Non-atomic identified elements constrain states too, so consistency is
checked on all of them, not only on atoms.

Dependencies:
- itertools: For the unconstrained product of a horizontal sum.
- loguru: For logging search sizes.
- app.helper.bitmask: For the unions of blocks.
- app.core.settings: For the search-space guard.

Author: @kcaparas1630
"""
import itertools
from typing import Dict, List, Optional, Sequence, Tuple

from loguru import logger

from app.core.settings import settings
from app.errors.exceptions import GuardExceededError, ModeMismatchError
from app.helper.bitmask import positions, subset_unions, to_mask
from app.schemas.logic import LogicMode, PartitionLogic, TwoValuedState

# (context index, bitmask of the block indices whose union is the element)
Occurrence = Tuple[int, int]


def _shared_elements(logic: PartitionLogic) -> List[List[Occurrence]]:
    """Occurrences of every proper element that appears in at least two contexts."""
    position = positions(logic.ground)
    full = to_mask(logic.ground, position)
    occurrences: Dict[int, List[Occurrence]] = {}
    for c, context in enumerate(logic.contexts):
        masks = [to_mask(block, position) for block in context.blocks]
        for mask, used in subset_unions(masks).items():
            if mask in (0, full):
                continue
            occurrences.setdefault(mask, []).append((c, used))
    return [found for found in occurrences.values() if len(found) > 1]


def _search(logic: PartitionLogic) -> List[TwoValuedState]:
    # for every context, the checks (own blocks, first context, its blocks) it must pass
    checks: List[List[Tuple[int, int, int]]] = [[] for _ in logic.contexts]
    for found in _shared_elements(logic):
        first, first_used = found[0]
        for c, used in found[1:]:
            checks[c].append((used, first, first_used))

    block_counts = [context.block_count for context in logic.contexts]
    results: List[TwoValuedState] = []
    choices: List[int] = []

    def extend(c: int) -> None:
        if c == len(block_counts):
            results.append(TwoValuedState(choices=tuple(choices)))
            return
        for j in range(block_counts[c]):
            consistent = all(
                bool(used >> j & 1) == bool(first_used >> choices[first] & 1)
                for used, first, first_used in checks[c]
            )
            if consistent:
                choices.append(j)
                extend(c + 1)
                choices.pop()

    extend(0)
    return results


def two_valued_states(logic: PartitionLogic, limit: Optional[int] = None) -> List[TwoValuedState]:
    """
    All two-valued states, in lexicographic order of their block choices.

    Args:
        logic: The partition logic.
        limit: Guard on Π_c |blocks(c)|; defaults to the configured limit.

    Raises:
        GuardExceededError: If the product search space exceeds the limit.
    """
    if limit is None:
        limit = settings.two_valued_state_limit
    size = logic.search_space()
    if size > limit:
        raise GuardExceededError("Two-valued state search space", size, limit)
    if logic.mode == LogicMode.CONTEXT_TAGGED:
        states = [
            TwoValuedState(choices=choice)
            for choice in itertools.product(*(range(c.block_count) for c in logic.contexts))
        ]
    else:
        states = _search(logic)
    logger.info(f"Found {len(states)} two-valued states in a search space of {size}")
    return states


def point_induced_states(logic: PartitionLogic) -> List[TwoValuedState]:
    """
    The states induced by ground elements: a block is true iff it contains the element.

    Raises:
        ModeMismatchError: For horizontal sums, whose atoms are not sets of ground elements.
    """
    if logic.mode != LogicMode.SET_IDENTIFIED:
        raise ModeMismatchError(LogicMode.SET_IDENTIFIED.value, logic.mode.value)
    owners = [context.block_index() for context in logic.contexts]
    induced = [TwoValuedState(choices=tuple(owner[x] for owner in owners)) for x in logic.ground]
    return list(dict.fromkeys(induced))


def _atom_coordinates(logic: PartitionLogic) -> List[Tuple[int, int]]:
    """(context, block index) of the first occurrence of every atom."""
    first: Dict[object, Tuple[int, int]] = {}
    for c, context in enumerate(logic.contexts):
        for j, block in enumerate(context.blocks):
            # horizontal sums share only the ground, which is an atom of trivial contexts
            tagged = logic.mode == LogicMode.CONTEXT_TAGGED and block != logic.ground
            key: object = (c, block) if tagged else block
            first.setdefault(key, (c, j))
    return list(first.values())


def atom_values(logic: PartitionLogic, state: TwoValuedState) -> List[int]:
    """The value of every atom under a state, in the order of _atom_coordinates."""
    return [state.value(c, j) for c, j in _atom_coordinates(logic)]


def is_separating(logic: PartitionLogic, states: Sequence[TwoValuedState]) -> bool:
    """
    True iff every pair of distinct atoms receives different values under some state.
    """
    if not states:
        return False
    columns = [atom_values(logic, state) for state in states]
    profiles = list(zip(*columns))
    return len(set(profiles)) == len(profiles)
