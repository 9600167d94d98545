"""
Automaton Core Service

Construction, validation and step/run semantics of deterministic Mealy automata.
Every other service consumes this module. All functions are pure; automata are
immutable once built.

Symbols may be given either as dense indices (int) or as labels (str).

Dependencies:
- pydantic: For the ValidationResult schema.
- loguru: For logging validation failures.
- app.schemas.automaton: For MealyAutomaton and the invariant checks.
- app.errors.exceptions: For InvalidAutomatonError and UnknownSymbolError.

Author: @kcaparas1630
"""
from typing import List, Optional, Sequence, Tuple

from loguru import logger
from pydantic import BaseModel

from app.errors.exceptions import InvalidAutomatonError, UnknownSymbolError
from app.schemas.automaton import Diagnostic, MealyAutomaton, Symbol, Word, collect_diagnostics


class ValidationResult(BaseModel):
    automaton: Optional[MealyAutomaton] = None
    diagnostics: List[Diagnostic] = []

    @property
    def is_valid(self) -> bool:
        return self.automaton is not None


def validate(
    states: Sequence[str],
    inputs: Sequence[str],
    outputs: Sequence[str],
    delta: Sequence[Sequence[int]],
    lambda_: Sequence[Sequence[int]],
) -> ValidationResult:
    """
    Check candidate tables and build the automaton if every invariant holds.

    Args:
        states, inputs, outputs: Label sequences, indexed densely.
        delta: delta[s][i] is the index of the successor state.
        lambda_: lambda_[s][i] is the index of the emitted output.

    Returns:
        ValidationResult: the automaton, or every violated invariant with its coordinate.
    """
    diagnostics = collect_diagnostics(states, inputs, outputs, delta, lambda_)
    if diagnostics:
        logger.debug(f"Automaton tables rejected with {len(diagnostics)} diagnostics")
        return ValidationResult(diagnostics=diagnostics)
    automaton = MealyAutomaton(
        states=tuple(str(s) for s in states),
        inputs=tuple(str(i) for i in inputs),
        outputs=tuple(str(o) for o in outputs),
        delta=tuple(tuple(row) for row in delta),
        lambda_=tuple(tuple(row) for row in lambda_),
    )
    return ValidationResult(automaton=automaton)


def build_automaton(
    states: Sequence[str],
    inputs: Sequence[str],
    outputs: Sequence[str],
    delta: Sequence[Sequence[int]],
    lambda_: Sequence[Sequence[int]],
) -> MealyAutomaton:
    """Like validate, but raises InvalidAutomatonError instead of returning diagnostics."""
    result = validate(states, inputs, outputs, delta, lambda_)
    if not result.is_valid:
        raise InvalidAutomatonError(str(d) for d in result.diagnostics)
    return result.automaton


def _resolve(kind: str, labels: Sequence[str], symbol: Symbol) -> int:
    if isinstance(symbol, bool):
        raise UnknownSymbolError(kind, symbol)
    if isinstance(symbol, int):
        if 0 <= symbol < len(labels):
            return symbol
        raise UnknownSymbolError(kind, symbol)
    try:
        return labels.index(str(symbol))
    except ValueError:
        raise UnknownSymbolError(kind, symbol) from None


def state_index(automaton: MealyAutomaton, symbol: Symbol) -> int:
    return _resolve("state", automaton.states, symbol)


def input_index(automaton: MealyAutomaton, symbol: Symbol) -> int:
    return _resolve("input", automaton.inputs, symbol)


def word_indices(automaton: MealyAutomaton, word: Sequence[Symbol]) -> Word:
    """Resolve every symbol of a word to its dense input index."""
    return tuple(input_index(automaton, symbol) for symbol in word)


def step(automaton: MealyAutomaton, state: Symbol, symbol: Symbol) -> Tuple[int, int]:
    """
    One transition: returns (δ(s, i), λ(s, i)) as dense indices.

    Example:
        >>> step(mo3, "2", "2")   # labels
        (0, 1)                    # state "1", output "1"
    """
    s = state_index(automaton, state)
    i = input_index(automaton, symbol)
    return automaton.delta[s][i], automaton.lambda_[s][i]


def run(automaton: MealyAutomaton, state: Symbol, word: Sequence[Symbol]) -> Tuple[int, ...]:
    """Thread the state through δ symbol by symbol and return the λ outputs."""
    s = state_index(automaton, state)
    outputs = []
    for i in word_indices(automaton, word):
        outputs.append(automaton.lambda_[s][i])
        s = automaton.delta[s][i]
    return tuple(outputs)


def final_state(automaton: MealyAutomaton, state: Symbol, word: Sequence[Symbol]) -> int:
    """The iterated transition δ*(s, w)."""
    s = state_index(automaton, state)
    for i in word_indices(automaton, word):
        s = automaton.delta[s][i]
    return s
