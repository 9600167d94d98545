"""
Description:
This module defines the generalized urn model schemas.

An urn model ⟨U, C, L, Λ⟩ has ball types U, colors C, a symbol alphabet L and a
total lookup table Λ(u, c) giving the symbol a ball type shows through a
color filter. Translations hold the three bijections that identify an urn model
with a Mealy automaton.

Dependencies:
- pydantic: For data validation and immutability.
- enum: For the translation direction.

Author: @kcaparas1630
"""
from enum import Enum
from typing import Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator


class UrnModel(BaseModel):
    model_config = ConfigDict(frozen=True)

    ball_types: Tuple[str, ...]
    colors: Tuple[str, ...]
    symbols: Tuple[str, ...]
    lookup: Tuple[Tuple[int, ...], ...] = Field(..., description="lookup[ball type][color] -> symbol index")

    @model_validator(mode="after")
    def check_invariants(self) -> "UrnModel":
        for name, labels in (("ball type", self.ball_types), ("color", self.colors), ("symbol", self.symbols)):
            if not labels:
                raise ValueError(f"{name} set is empty")
            if len(set(labels)) != len(labels):
                raise ValueError(f"duplicate {name} labels")
        if len(self.lookup) != len(self.ball_types):
            raise ValueError("lookup must have one row per ball type")
        for u, row in enumerate(self.lookup):
            if len(row) != len(self.colors):
                raise ValueError(f"lookup row of ball type {u} must have one entry per color")
            for c, v in enumerate(row):
                if not 0 <= v < len(self.symbols):
                    raise ValueError(f"lookup entry ({u}, {c}) out of range")
        return self


class TranslationDirection(str, Enum):
    URN_TO_AUTOMATON = "urn_to_automaton"
    AUTOMATON_TO_URN = "automaton_to_urn"


def _is_bijection(mapping: Tuple[int, ...]) -> bool:
    return sorted(mapping) == list(range(len(mapping)))


class Translation(BaseModel):
    """
    Three bijections on dense indices.

    For URN_TO_AUTOMATON these are t_S (ball type -> state), t_I (color -> input)
    and t_O (symbol -> output); for AUTOMATON_TO_URN they are τ_U (state -> ball
    type), τ_C (input -> color) and τ_L (output -> symbol). `state_map[x]` is the
    image of x, and likewise for the other two maps.
    """
    model_config = ConfigDict(frozen=True)

    direction: TranslationDirection
    state_map: Tuple[int, ...]
    input_map: Tuple[int, ...]
    output_map: Tuple[int, ...]

    @model_validator(mode="after")
    def check_bijections(self) -> "Translation":
        for name in ("state_map", "input_map", "output_map"):
            if not _is_bijection(getattr(self, name)):
                raise ValueError(f"{name} is not a bijection")
        return self

    @classmethod
    def identity(cls, direction: TranslationDirection, n_states: int, n_inputs: int, n_outputs: int) -> "Translation":
        return cls(
            direction=direction,
            state_map=tuple(range(n_states)),
            input_map=tuple(range(n_inputs)),
            output_map=tuple(range(n_outputs)),
        )

    def inverse(self) -> "Translation":
        flipped = (
            TranslationDirection.AUTOMATON_TO_URN
            if self.direction == TranslationDirection.URN_TO_AUTOMATON
            else TranslationDirection.URN_TO_AUTOMATON
        )
        return Translation(
            direction=flipped,
            state_map=_invert(self.state_map),
            input_map=_invert(self.input_map),
            output_map=_invert(self.output_map),
        )

    def is_identity(self) -> bool:
        return all(
            mapping == tuple(range(len(mapping)))
            for mapping in (self.state_map, self.input_map, self.output_map)
        )


def _invert(mapping: Tuple[int, ...]) -> Tuple[int, ...]:
    inverse = [0] * len(mapping)
    for x, y in enumerate(mapping):
        inverse[y] = x
    return tuple(inverse)


def compose(first: Tuple[int, ...], second: Tuple[int, ...]) -> Tuple[int, ...]:
    """The map x -> second[first[x]]."""
    return tuple(second[y] for y in first)


class RoundTripReport(BaseModel):
    """Outcome of translating an automaton to an urn model and back."""
    lambda_preserved: bool
    translations_compose_to_identity: bool
    delta_preserved: bool = Field(..., description="False whenever the original δ was not constant")

    @property
    def holds(self) -> bool:
        return self.lambda_preserved and self.translations_compose_to_identity
