"""
Description:
This module defines the Partition schema.

A partition is a set of disjoint nonempty blocks covering an ordered ground set
of integers. Instances are always in canonical form: ground ascending, elements
ascending inside each block, blocks ordered by their smallest element. Use
`Partition.from_blocks` to canonicalize arbitrary input.

Dependencies:
- pydantic: For data validation and immutability.

Author: @kcaparas1630
"""
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator

Block = Tuple[int, ...]


def format_block(block: Iterable[object], separator: str = ",") -> str:
    return "{" + separator.join(str(x) for x in block) + "}"


class Partition(BaseModel):
    model_config = ConfigDict(frozen=True)

    ground: Tuple[int, ...] = Field(..., description="Ground set, strictly ascending")
    blocks: Tuple[Block, ...] = Field(..., description="Blocks in canonical order")

    @model_validator(mode="after")
    def check_invariants(self) -> "Partition":
        if not self.ground:
            raise ValueError("ground set is empty")
        if any(a >= b for a, b in zip(self.ground, self.ground[1:])):
            raise ValueError("ground set must be strictly ascending")
        seen = set()
        for block in self.blocks:
            if not block:
                raise ValueError("blocks must be nonempty")
            if any(a >= b for a, b in zip(block, block[1:])):
                raise ValueError(f"block {block} is not ascending")
            overlap = seen.intersection(block)
            if overlap:
                raise ValueError(f"blocks are not disjoint: {sorted(overlap)}")
            seen.update(block)
        if seen != set(self.ground):
            raise ValueError("blocks do not cover the ground set exactly")
        if any(a[0] >= b[0] for a, b in zip(self.blocks, self.blocks[1:])):
            raise ValueError("blocks are not ordered by their smallest element")
        return self

    @classmethod
    def from_blocks(cls, blocks: Iterable[Iterable[int]], ground: Optional[Iterable[int]] = None) -> "Partition":
        """
        Build a partition in canonical form.

        Example:
            >>> Partition.from_blocks([[3, 2], [1]]).blocks
            ((1,), (2, 3))
        """
        canonical = sorted((tuple(sorted(b)) for b in blocks), key=lambda b: b[0] if b else 0)
        if ground is None:
            ground = [x for b in canonical for x in b]
        return cls(ground=tuple(sorted(ground)), blocks=tuple(canonical))

    @classmethod
    def from_labels(cls, ground: Sequence[int], labels: Sequence[object]) -> "Partition":
        """Group ground elements by an arbitrary key per element (labels[j] belongs to ground[j])."""
        groups: Dict[object, List[int]] = {}
        for x, key in zip(ground, labels):
            groups.setdefault(key, []).append(x)
        return cls.from_blocks(groups.values(), ground)

    @classmethod
    def trivial(cls, ground: Iterable[int]) -> "Partition":
        ground = tuple(sorted(ground))
        return cls(ground=ground, blocks=(ground,))

    @classmethod
    def discrete(cls, ground: Iterable[int]) -> "Partition":
        ground = tuple(sorted(ground))
        return cls(ground=ground, blocks=tuple((x,) for x in ground))

    @property
    def block_count(self) -> int:
        return len(self.blocks)

    def is_trivial(self) -> bool:
        return len(self.blocks) == 1

    def is_discrete(self) -> bool:
        return len(self.blocks) == len(self.ground)

    def block_index(self) -> Dict[int, int]:
        """Map every ground element to the index of its block."""
        return {x: j for j, block in enumerate(self.blocks) for x in block}

    def as_labels(self, labels: Sequence[str]) -> List[List[str]]:
        """Blocks with every element replaced by labels[element]."""
        return [[labels[x] for x in block] for block in self.blocks]

    def format(self, labels: Optional[Sequence[str]] = None, separator: str = ",") -> str:
        """Set notation, e.g. {{1},{2,3}}."""
        blocks = self.blocks if labels is None else self.as_labels(labels)
        return "{" + separator.join(format_block(b, separator) for b in blocks) + "}"

    def __str__(self) -> str:
        return self.format()
