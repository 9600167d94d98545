"""
Pasting Service

Builds partition logics from partitions and exposes their derived views.

Every context (partition) generates the Boolean algebra of the unions of its
blocks. `paste` glues these algebras by identifying elements that are equal as
subsets of the ground set; `horizontal_sum` shares only the empty set and the
ground and keeps everything else context-distinct. The order of a logic is the
inclusion order inside each context, closed transitively across contexts.

Dependencies:
- networkx: For the covering relation (transitive reduction) of the order.
- loguru: For logging logic construction.
- app.schemas.logic: For PartitionLogic, LogicElement and LogicMode.
- app.helper.bitmask: For enumerating unions of blocks.

Author: @kcaparas1630
"""
from typing import Iterable, List, Optional, Sequence, Set

import networkx as nx
from loguru import logger

from app.errors.exceptions import GroundMismatchError
from app.helper.bitmask import from_mask, positions, subset_unions, to_mask
from app.schemas.logic import LogicElement, LogicMode, PartitionLogic
from app.schemas.partitions import Partition


def _checked_contexts(ground: Sequence[int], partitions: Iterable[Partition]) -> List[Partition]:
    ground = tuple(sorted(ground))
    contexts = list(partitions)
    for index, partition in enumerate(contexts):
        if partition.ground != ground:
            raise GroundMismatchError(f"Partition {index + 1} ({partition}) is not a partition of {ground}.")
    return contexts


def paste(ground: Sequence[int], partitions: Iterable[Partition]) -> PartitionLogic:
    """
    Paste the Boolean algebras of the partitions, identifying set-equal elements.

    Repeated partitions are identified as well, so pasting is idempotent.

    Example:
        >>> logic = paste([1, 2, 3], mo3_partitions)
        >>> len(atoms(logic)), element_count(logic)
        (6, 8)
    """
    contexts = list(dict.fromkeys(_checked_contexts(ground, partitions)))
    logic = PartitionLogic(ground=tuple(sorted(ground)), contexts=tuple(contexts), mode=LogicMode.SET_IDENTIFIED)
    logger.debug(f"Pasted {len(contexts)} contexts over {len(logic.ground)} ground elements")
    return logic


def horizontal_sum(
    ground: Sequence[int],
    contexts: Iterable[Partition],
    labels: Optional[Sequence[str]] = None,
) -> PartitionLogic:
    """Glue the Boolean algebras of the contexts at the empty set and the ground only."""
    contexts = _checked_contexts(ground, contexts)
    return PartitionLogic(
        ground=tuple(sorted(ground)),
        contexts=tuple(contexts),
        mode=LogicMode.CONTEXT_TAGGED,
        context_labels=tuple(labels) if labels is not None else None,
    )


def _context_of(logic: PartitionLogic, index: int, members: Sequence[int]) -> Optional[int]:
    if logic.mode == LogicMode.SET_IDENTIFIED or not members or tuple(members) == logic.ground:
        return None
    return index


def _element(logic: PartitionLogic, index: int, members: Sequence[int]) -> LogicElement:
    return LogicElement(members=tuple(members), context=_context_of(logic, index, members))


def _context_elements(logic: PartitionLogic, index: int) -> List[LogicElement]:
    position = positions(logic.ground)
    masks = [to_mask(block, position) for block in logic.contexts[index].blocks]
    return [_element(logic, index, from_mask(mask, logic.ground)) for mask in subset_unions(masks)]


def _sort_key(element: LogicElement):
    return (len(element.members), -1 if element.context is None else element.context, element.members)


def elements(logic: PartitionLogic) -> List[LogicElement]:
    """All elements of the logic, from the empty set up to the ground."""
    found: Set[LogicElement] = {
        LogicElement(members=()),
        LogicElement(members=logic.ground),
    }
    for index in range(logic.context_count):
        found.update(_context_elements(logic, index))
    return sorted(found, key=_sort_key)


def element_count(logic: PartitionLogic) -> int:
    """
    Number of elements.

    For a horizontal sum this is Σ_c (2^|blocks(c)| − 2) + 2 and is computed
    without materializing the elements.
    """
    if logic.mode == LogicMode.CONTEXT_TAGGED:
        return 2 + sum(2**context.block_count - 2 for context in logic.contexts)
    return len(elements(logic))


def atoms(logic: PartitionLogic) -> List[LogicElement]:
    """
    The atoms: all blocks, set-equal blocks merged when pasted.

    In a horizontal sum each nontrivial context keeps its own atoms.
    """
    found = {}
    for index, context in enumerate(logic.contexts):
        for block in context.blocks:
            element = LogicElement(members=block, context=_context_of(logic, index, block))
            found.setdefault(element, None)
    return sorted(found, key=_sort_key)


def hasse_diagram(logic: PartitionLogic) -> nx.DiGraph:
    """
    The covering relation as a directed graph, edges pointing upwards.

    Inside a context an element is covered by its unions with one more block;
    the transitive reduction removes covers that other contexts make redundant.
    """
    graph = nx.DiGraph()
    graph.add_nodes_from(elements(logic))
    position = positions(logic.ground)
    for index, context in enumerate(logic.contexts):
        masks = [to_mask(block, position) for block in context.blocks]
        for mask in subset_unions(masks):
            lower = from_mask(mask, logic.ground)
            for block in masks:
                if mask & block:
                    continue
                upper = from_mask(mask | block, logic.ground)
                graph.add_edge(_element(logic, index, lower), _element(logic, index, upper))
    reduced = nx.transitive_reduction(graph)
    reduced.add_nodes_from(graph.nodes)
    return reduced


def order(logic: PartitionLogic) -> nx.DiGraph:
    """The (reflexive) partial order: an edge e -> f means e <= f."""
    closure = nx.transitive_closure_dag(hasse_diagram(logic))
    closure.add_edges_from((e, e) for e in list(closure.nodes))
    return closure


def leq(logic: PartitionLogic, lower: LogicElement, upper: LogicElement) -> bool:
    return order(logic).has_edge(lower, upper)


def is_boolean(logic: PartitionLogic) -> bool:
    """
    True iff a single context's Boolean algebra already holds every element of the logic.
    """
    every = set(elements(logic))
    return any(
        set(_context_elements(logic, index)) >= every
        for index in range(logic.context_count)
    )
