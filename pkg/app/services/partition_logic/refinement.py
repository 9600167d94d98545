"""
Refinement Order Utility Module

P refines Q when every block of P lies inside some block of Q.

Dependencies:
- app.schemas.partitions: For the Partition schema.
- app.errors.exceptions: For GroundMismatchError.

Author: @kcaparas1630
"""
from typing import Iterable, List

from app.errors.exceptions import GroundMismatchError
from app.schemas.partitions import Partition


def refines(finer: Partition, coarser: Partition) -> bool:
    """
    Check whether `finer` refines `coarser`.

    Raises:
        GroundMismatchError: If the partitions have different ground sets.

    Example:
        >>> refines(Partition.discrete([1, 2, 3]), Partition.from_blocks([[1], [2, 3]]))
        True
    """
    if finer.ground != coarser.ground:
        raise GroundMismatchError()
    owner = coarser.block_index()
    return all(len({owner[x] for x in block}) == 1 for block in finer.blocks)


def strictly_refines(finer: Partition, coarser: Partition) -> bool:
    return finer != coarser and refines(finer, coarser)


def maximal_partitions(partitions: Iterable[Partition]) -> List[Partition]:
    """
    The finest partitions: those no other partition strictly refines.

    The input order is kept.
    """
    candidates = list(dict.fromkeys(partitions))
    return [
        p for p in candidates
        if not any(strictly_refines(q, p) for q in candidates)
    ]
