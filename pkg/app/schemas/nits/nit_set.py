"""
Description:
Schemas for complete sets of comeasurable nits.

A nit partition splits the product states {1..n^k} into n blocks of n^(k-1)
states each. A complete nit set holds k such partitions; its canonical form is
the sorted sequence of all k·n blocks, which is also its export line, e.g.
{{1, 2, 3}, {1, 4, 5}, {2, 6, 7}, {3, 8, 9}, {4, 6, 8}, {5, 7, 9}}.

Dependencies:
- pydantic: For data validation and immutability.
- app.schemas.partitions: For the Partition schema.

Author: @kcaparas1630
"""
from typing import List, Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator

from app.schemas.partitions import Block, Partition, format_block


def product_ground(n: int, k: int) -> Tuple[int, ...]:
    return tuple(range(1, n**k + 1))


def nit_shape_errors(partition: Partition, n: int, k: int) -> List[str]:
    """Reasons why a partition is not a nit partition of the n^k product states."""
    errors = []
    if partition.ground != product_ground(n, k):
        errors.append(f"ground must be 1..{n**k}")
    if partition.block_count != n:
        errors.append(f"expected {n} blocks, got {partition.block_count}")
    sizes = {len(b) for b in partition.blocks}
    if sizes - {n ** (k - 1)}:
        errors.append(f"every block must hold {n ** (k - 1)} states")
    return errors


class CompleteNitSet(BaseModel):
    model_config = ConfigDict(frozen=True)

    n: int = Field(..., ge=1, description="Information base")
    k: int = Field(..., ge=1, description="Number of particles")
    partitions: Tuple[Partition, ...] = Field(..., description="k nit partitions, sorted by their blocks")

    @model_validator(mode="after")
    def check_shape(self) -> "CompleteNitSet":
        if len(self.partitions) != self.k:
            raise ValueError(f"expected {self.k} partitions, got {len(self.partitions)}")
        for partition in self.partitions:
            errors = nit_shape_errors(partition, self.n, self.k)
            if errors:
                raise ValueError(f"{partition} is not a nit partition: {'; '.join(errors)}")
        if list(self.partitions) != sorted(self.partitions, key=lambda p: p.blocks):
            raise ValueError("partitions must be sorted by their blocks")
        return self

    @classmethod
    def from_partitions(cls, n: int, k: int, partitions: List[Partition]) -> "CompleteNitSet":
        return cls(n=n, k=k, partitions=tuple(sorted(partitions, key=lambda p: p.blocks)))

    @property
    def ground(self) -> Tuple[int, ...]:
        return product_ground(self.n, self.k)

    def canonical_blocks(self) -> Tuple[Block, ...]:
        return tuple(sorted(block for partition in self.partitions for block in partition.blocks))

    def export_line(self) -> str:
        return "{" + ", ".join(format_block(b, ", ") for b in self.canonical_blocks()) + "}"
