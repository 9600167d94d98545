"""
Description:
This module defines the partition logic schemas.

A PartitionLogic is a ground set together with a list of contexts (partitions
of the ground). In SET_IDENTIFIED mode elements that are equal as subsets of the
ground are identified across contexts (pasting); in CONTEXT_TAGGED mode only the
empty set and the ground are shared (horizontal sum).

Dependencies:
- pydantic: For data validation and immutability.
- enum: For the pasting discipline.
- app.schemas.partitions: For the Partition schema.

Author: @kcaparas1630
"""
from enum import Enum
from typing import Dict, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator

from app.schemas.partitions import Block, Partition, format_block


class LogicMode(str, Enum):
    """Pasting discipline of a partition logic."""
    SET_IDENTIFIED = "set_identified"
    CONTEXT_TAGGED = "context_tagged"


class LogicElement(BaseModel):
    """
    One element of a partition logic.

    `context` is None for elements shared by every context (always the empty set
    and the ground; in SET_IDENTIFIED mode every element) and the index of the
    owning context otherwise.
    """
    model_config = ConfigDict(frozen=True)

    members: Tuple[int, ...]
    context: Optional[int] = None

    def label(self) -> str:
        if not self.members:
            return "∅"
        text = format_block(self.members)
        return text if self.context is None else f"c{self.context + 1}:{text}"


class PartitionLogic(BaseModel):
    model_config = ConfigDict(frozen=True)

    ground: Tuple[int, ...]
    contexts: Tuple[Partition, ...]
    mode: LogicMode = LogicMode.SET_IDENTIFIED
    context_labels: Optional[Tuple[str, ...]] = Field(
        default=None, description="Optional names of the contexts, e.g. the complete nit set they stem from"
    )

    @model_validator(mode="after")
    def check_invariants(self) -> "PartitionLogic":
        for index, context in enumerate(self.contexts):
            if context.ground != self.ground:
                raise ValueError(f"context {index + 1} is not a partition of the logic's ground set")
        if self.mode == LogicMode.SET_IDENTIFIED and len(set(self.contexts)) != len(self.contexts):
            raise ValueError("contexts of a pasted logic must be pairwise distinct")
        if self.context_labels is not None and len(self.context_labels) != len(self.contexts):
            raise ValueError("context_labels must name every context")
        return self

    @property
    def context_count(self) -> int:
        return len(self.contexts)

    def max_block_count(self) -> int:
        return max((c.block_count for c in self.contexts), default=0)

    def search_space(self) -> int:
        """Number of assignments choosing one block per context."""
        size = 1
        for context in self.contexts:
            size *= context.block_count
        return size


class TwoValuedState(BaseModel):
    """
    A two-valued state, stored as the index of the block valued 1 in every context.

    Exactly one block per context is true; a union of blocks is true iff it
    contains the chosen block.
    """
    model_config = ConfigDict(frozen=True)

    choices: Tuple[int, ...]

    def value(self, context: int, block: int) -> int:
        return int(self.choices[context] == block)

    def assignment(self, logic: PartitionLogic) -> Dict[Tuple[int, Block], int]:
        """The full map (context index, block) -> {0, 1}."""
        return {
            (c, block): self.value(c, j)
            for c, context in enumerate(logic.contexts)
            for j, block in enumerate(context.blocks)
        }

    def chosen_blocks(self, logic: PartitionLogic) -> Tuple[Block, ...]:
        return tuple(context.blocks[j] for context, j in zip(logic.contexts, self.choices))
