"""
Logic to Automaton Construction

Constructs a Mealy automaton realizing a pasted partition logic: one input per
context, as many outputs as the largest context has blocks, λ(s, c) = index of
the block of context c containing s, and a transition function that collapses
every state into the first one after a single step.

The automaton is not unique; only its finest partitions are determined by the
logic.

Dependencies:
- loguru: For logging the construction.
- app.services.automaton_core: For building the automaton.

Author: @kcaparas1630
"""
from typing import Optional, Sequence

from loguru import logger

from app.errors.exceptions import EmptyLogicError, ModeMismatchError
from app.schemas.automaton import MealyAutomaton
from app.schemas.logic import LogicMode, PartitionLogic
from app.services.automaton_core import build_automaton


def automaton_from_logic(logic: PartitionLogic, state_labels: Optional[Sequence[str]] = None) -> MealyAutomaton:
    """
    Build an automaton whose finest partitions are the contexts of the logic.

    Args:
        logic: A pasted (SET_IDENTIFIED) logic with at least one context.
        state_labels: Labels of the ground elements; defaults to their values.

    Raises:
        ModeMismatchError: For horizontal sums.
        EmptyLogicError: If the logic has no contexts.
    """
    if logic.mode != LogicMode.SET_IDENTIFIED:
        raise ModeMismatchError(LogicMode.SET_IDENTIFIED.value, logic.mode.value)
    if not logic.contexts:
        raise EmptyLogicError()

    owners = [context.block_index() for context in logic.contexts]
    lambda_ = [[owner[x] for owner in owners] for x in logic.ground]
    delta = [[0] * logic.context_count for _ in logic.ground]
    automaton = build_automaton(
        states=list(state_labels) if state_labels is not None else [str(x) for x in logic.ground],
        inputs=[str(c + 1) for c in range(logic.context_count)],
        outputs=[str(o + 1) for o in range(logic.max_block_count())],
        delta=delta,
        lambda_=lambda_,
    )
    logger.info(
        f"Built automaton with {automaton.n_states} states, {automaton.n_inputs} inputs, "
        f"{automaton.n_outputs} outputs from a logic"
    )
    return automaton
