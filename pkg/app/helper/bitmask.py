"""
Description:
Bitmask encoding of subsets of an ordered ground set.

Element ground[j] is bit j. Used by the exhaustive searches (two-valued states,
nit enumeration) where set intersections dominate the running time.

Author: @kcaparas1630
"""
from typing import Dict, Iterable, Sequence, Tuple


def positions(ground: Sequence[int]) -> Dict[int, int]:
    return {x: j for j, x in enumerate(ground)}


def to_mask(members: Iterable[int], position: Dict[int, int]) -> int:
    mask = 0
    for x in members:
        mask |= 1 << position[x]
    return mask


def from_mask(mask: int, ground: Sequence[int]) -> Tuple[int, ...]:
    return tuple(x for j, x in enumerate(ground) if mask >> j & 1)


def popcount(mask: int) -> int:
    return mask.bit_count()


def subset_unions(block_masks: Sequence[int]) -> Dict[int, int]:
    """
    Every union of blocks, keyed by its mask, with the bitmask of the block indices it uses.

    Blocks are disjoint, so each union has exactly one generating index set.
    """
    unions = {0: 0}
    for j, block in enumerate(block_masks):
        for mask, used in list(unions.items()):
            unions[mask | block] = used | 1 << j
    return unions
