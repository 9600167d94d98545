"""
Description:
This module defines the MealyAutomaton schema.

States, inputs and outputs are dense 0-based indices; the `states`, `inputs` and
`outputs` tuples hold their display labels (the canonical examples use 1-based
labels). `delta[s][i]` is a state index and `lambda_[s][i]` an output index; the
output table serializes under the name "lambda".

Dependencies:
- pydantic: For data validation and immutability.
- app.schemas.automaton.diagnostics: For the invariant checks.

Author: @kcaparas1630
"""
from typing import Tuple, Union

from pydantic import BaseModel, ConfigDict, Field, model_validator

from app.schemas.automaton.diagnostics import collect_diagnostics

# A word is a sequence of dense input indices.
Word = Tuple[int, ...]
Symbol = Union[int, str]


class MealyAutomaton(BaseModel):
    """Deterministic Mealy automaton ⟨S, I, O, δ, λ⟩ with total tables."""

    model_config = ConfigDict(frozen=True, populate_by_name=True)

    states: Tuple[str, ...] = Field(..., description="State labels, indexed densely")
    inputs: Tuple[str, ...] = Field(..., description="Input labels, indexed densely")
    outputs: Tuple[str, ...] = Field(..., description="Output labels, indexed densely")
    delta: Tuple[Tuple[int, ...], ...] = Field(..., description="delta[state][input] -> state index")
    lambda_: Tuple[Tuple[int, ...], ...] = Field(..., alias="lambda", description="lambda[state][input] -> output index")

    @model_validator(mode="after")
    def check_invariants(self) -> "MealyAutomaton":
        diagnostics = collect_diagnostics(self.states, self.inputs, self.outputs, self.delta, self.lambda_)
        if diagnostics:
            raise ValueError("; ".join(str(d) for d in diagnostics))
        return self

    @property
    def n_states(self) -> int:
        return len(self.states)

    @property
    def n_inputs(self) -> int:
        return len(self.inputs)

    @property
    def n_outputs(self) -> int:
        return len(self.outputs)

    def input_word_labels(self, word: Word) -> Tuple[str, ...]:
        return tuple(self.inputs[i] for i in word)
