"""
Canonical Examples Service

The worked examples shipped with the library: the MO₃ automaton, the triangle
automaton with its full output table, the swap automaton with a 4×4
permutation matrix, the three-ball urn, the first two-trit complete set, an
identity automaton, and the logics of MO₃ and of the triangle.

Dependencies:
- loguru: For logging lookups.
- app.constants.example_names: For the example names.

Author: @kcaparas1630
"""
from typing import Callable, Dict, Union

from loguru import logger

from app.constants.example_names import (
    EXAMPLE_NAMES,
    IDENTITY,
    MO3,
    MO3_LOGIC,
    SWAP_REVERSIBLE,
    TRIANGLE,
    TRIANGLE_LOGIC,
    TWO_TRIT_FIRST,
    URN_FIG1,
)
from app.errors.exceptions import UnknownExampleError
from app.schemas.automaton import MealyAutomaton
from app.schemas.logic import PartitionLogic
from app.schemas.nits import CompleteNitSet, product_ground
from app.schemas.partitions import Partition
from app.schemas.urn import UrnModel
from app.services.automaton_core import build_automaton
from app.services.partition_logic import paste

Example = Union[MealyAutomaton, UrnModel, PartitionLogic, CompleteNitSet]

# output value of the triangle automaton per state (rows) and input (columns)
TRIANGLE_OUTPUTS = (
    (1, 3, 2),
    (3, 2, 1),
    (2, 1, 3),
    (3, 3, 3),
)


def mo3() -> MealyAutomaton:
    """Three states; δ sends everything to state 1 and λ(s, i) is 1 iff s = i."""
    return build_automaton(
        states=["1", "2", "3"],
        inputs=["1", "2", "3"],
        outputs=["0", "1"],
        delta=[[0, 0, 0] for _ in range(3)],
        lambda_=[[int(s == i) for i in range(3)] for s in range(3)],
    )


def triangle() -> MealyAutomaton:
    return build_automaton(
        states=["1", "2", "3", "4"],
        inputs=["1", "2", "3"],
        outputs=["1", "2", "3"],
        delta=[[0, 0, 0] for _ in range(4)],
        lambda_=[[value - 1 for value in row] for row in TRIANGLE_OUTPUTS],
    )


def swap_reversible() -> MealyAutomaton:
    """δ(s, i) = s and λ(s, i) = (i + 1) mod 2; its permutation is (1,2)(3,4)."""
    return build_automaton(
        states=["1", "2"],
        inputs=["0", "1"],
        outputs=["0", "1"],
        delta=[[s, s] for s in range(2)],
        lambda_=[[(i + 1) % 2 for i in range(2)] for _ in range(2)],
    )


def identity() -> MealyAutomaton:
    """Transitions fix the state and every input reveals it."""
    return build_automaton(
        states=["1", "2", "3"],
        inputs=["1", "2"],
        outputs=["1", "2", "3"],
        delta=[[s, s] for s in range(3)],
        lambda_=[[s, s] for s in range(3)],
    )


def urn_fig1() -> UrnModel:
    """Ball type u shows a "0" through the u-th color filter and a "1" through the others."""
    return UrnModel(
        ball_types=("1", "2", "3"),
        colors=("red", "green", "blue"),
        symbols=("0", "1"),
        lookup=tuple(tuple(int(u != c) for c in range(3)) for u in range(3)),
    )


def two_trit_first() -> CompleteNitSet:
    ground = product_ground(3, 2)
    return CompleteNitSet.from_partitions(
        3,
        2,
        [
            Partition.from_blocks([[1, 2, 3], [4, 6, 8], [5, 7, 9]], ground),
            Partition.from_blocks([[1, 4, 5], [2, 6, 7], [3, 8, 9]], ground),
        ],
    )


def mo3_logic() -> PartitionLogic:
    ground = (1, 2, 3)
    return paste(ground, [Partition.from_blocks([[x], [y for y in ground if y != x]], ground) for x in ground])


def triangle_logic() -> PartitionLogic:
    ground = (1, 2, 3, 4)
    return paste(
        ground,
        [
            Partition.from_blocks([[1], [2, 4], [3]], ground),
            Partition.from_blocks([[1, 4], [2], [3]], ground),
            Partition.from_blocks([[1], [2], [3, 4]], ground),
        ],
    )


EXAMPLES: Dict[str, Callable[[], Example]] = {
    MO3: mo3,
    TRIANGLE: triangle,
    SWAP_REVERSIBLE: swap_reversible,
    URN_FIG1: urn_fig1,
    TWO_TRIT_FIRST: two_trit_first,
    IDENTITY: identity,
    MO3_LOGIC: mo3_logic,
    TRIANGLE_LOGIC: triangle_logic,
}


def get_example(name: str) -> Example:
    """
    Build a canonical example by name.

    Raises:
        UnknownExampleError: For names outside EXAMPLE_NAMES; the message lists the valid ones.
    """
    factory = EXAMPLES.get(name)
    if factory is None:
        logger.error(f"Unknown example requested: {name}")
        raise UnknownExampleError(name, EXAMPLE_NAMES)
    return factory()
