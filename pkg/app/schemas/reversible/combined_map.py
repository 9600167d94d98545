"""
Description:
Schemas for reversible automata: the combined map on S×I and one-hot configurations.

The domain S×I is ordered row-major by state then input, so the pair (s, i) has
index s·|I| + i; this ordering is part of the serialization contract.

Dependencies:
- pydantic: For data validation and immutability.

Author: @kcaparas1630
"""
from typing import Tuple

from pydantic import BaseModel, ConfigDict, model_validator

Pair = Tuple[int, int]


class CombinedMap(BaseModel):
    """U:(s, i) -> (δ(s, i), λ(s, i)) of an automaton with I = O."""
    model_config = ConfigDict(frozen=True)

    n_states: int
    n_inputs: int
    domain: Tuple[Pair, ...]
    image: Tuple[Pair, ...]

    def index(self, pair: Pair) -> int:
        return pair[0] * self.n_inputs + pair[1]

    def as_permutation(self) -> Tuple[int, ...]:
        """image index of every domain index (0-based)."""
        return tuple(self.index(target) for target in self.image)

    def is_bijective(self) -> bool:
        return len(set(self.image)) == len(self.domain)


class Configuration(BaseModel):
    """One-hot vector Ψ marking the current (state, pending-input) pair."""
    model_config = ConfigDict(frozen=True)

    vector: Tuple[int, ...]

    @model_validator(mode="after")
    def check_one_hot(self) -> "Configuration":
        if any(v not in (0, 1) for v in self.vector) or sum(self.vector) != 1:
            raise ValueError("configuration must be a one-hot 0/1 vector")
        return self

    @classmethod
    def one_hot(cls, index: int, size: int) -> "Configuration":
        if not 0 <= index < size:
            raise ValueError(f"index {index} outside a configuration of length {size}")
        return cls(vector=tuple(int(j == index) for j in range(size)))

    @property
    def index(self) -> int:
        return self.vector.index(1)
