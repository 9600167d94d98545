"""
Nit Enumeration Service

Exhaustive enumeration of complete sets of comeasurable nits: k partitions of
the n^k product states {1..n^k} into n blocks of n^(k-1) states each, such that
(i) every choice of one block per partition intersects in a single state and
(ii) these n^k intersections together give back all product states.

The search builds the k partitions one after the other, block by block, on
0-based product states. After j partitions the states fall into n^j cells of
n^(k-j) states; every block of the next partition must take exactly n^(k-j-1)
states from each cell, which prunes every branch that cannot end in
singletons. Partitions come out in lexicographic order of their blocks and each
chosen partition is larger than the previous one, so every set is found once.
The search is lazy: the first set is available without enumerating the rest.
Sorted results are produced by enumerate_complete_sets.

Dependencies:
- itertools: For block products and permutations.
- loguru: For logging enumeration sizes.
- app.helper.bitmask: For the subset encoding of the completeness check.
- app.schemas.nits: For CompleteNitSet.

Author: @kcaparas1630
"""
import itertools
import math
import re
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from loguru import logger

from app.core.settings import settings
from app.errors.exceptions import GuardExceededError, InvalidNitSetError
from app.helper.bitmask import popcount, positions, to_mask
from app.schemas.automaton import MealyAutomaton
from app.schemas.logic import PartitionLogic
from app.schemas.nits import CompleteNitSet, nit_shape_errors, product_ground
from app.schemas.partitions import Block, Partition
from app.services.automaton_core import build_automaton
from app.services.partition_logic import horizontal_sum

BLOCK_PATTERN = re.compile(r"\{([\d,\s]+)\}")

IndexBlock = Tuple[int, ...]
IndexPartition = Tuple[IndexBlock, ...]


def guard_product_states(n: int, k: int, limit: Optional[int] = None) -> int:
    """
    Validate n and k and return n^k.

    n^k is only computed once it is known to stay within the limit.

    Raises:
        InvalidNitSetError: If n or k is not an integer of at least 1.
        GuardExceededError: If n^k exceeds the limit (default: the configured nit ground limit).
    """
    for name, value in (("n", n), ("k", k)):
        if not isinstance(value, int) or isinstance(value, bool):
            raise InvalidNitSetError(f"{name} must be an integer, got {value!r}")
    if n < 1 or k < 1:
        raise InvalidNitSetError(f"n and k must be at least 1, got n={n}, k={k}")
    if limit is None:
        limit = settings.nit_ground_limit
    if n > 1 and k > limit.bit_length():
        raise GuardExceededError("Product state count", f"{n}^{k}", limit)
    size = n**k
    if size > limit:
        raise GuardExceededError("Product state count", size, limit)
    return size


def _guard_count(what: str, count: int, limit: Optional[int]) -> None:
    if limit is None:
        limit = settings.nit_set_limit
    if count > limit:
        raise GuardExceededError(what, count, limit)


def _blocks(
    remaining: IndexBlock, cell_of: Sequence[int], n_cells: int, per_cell: int, size: int
) -> Iterator[IndexBlock]:
    """Blocks holding remaining[0] and exactly per_cell states of every cell, in lexicographic order."""
    counts = [0] * n_cells
    counts[cell_of[remaining[0]]] = 1
    block = [remaining[0]]

    def grow(start: int) -> Iterator[IndexBlock]:
        if len(block) == size:
            yield tuple(block)
            return
        need = size - len(block)
        for position in range(start, len(remaining) - need + 1):
            x = remaining[position]
            cell = cell_of[x]
            if counts[cell] == per_cell:
                continue
            counts[cell] += 1
            block.append(x)
            yield from grow(position + 1)
            block.pop()
            counts[cell] -= 1

    yield from grow(1)


def _partitions(
    remaining: IndexBlock,
    cell_of: Sequence[int],
    n_cells: int,
    per_cell: int,
    size: int,
    floor: Optional[IndexPartition] = None,
) -> Iterator[IndexPartition]:
    """
    Partitions of `remaining` into blocks of `size` states that split every cell evenly.

    With a floor only partitions lexicographically larger than it are produced.
    """
    if not remaining:
        if floor is None:
            yield ()
        return
    for block in _blocks(remaining, cell_of, n_cells, per_cell, size):
        tail_floor = None
        if floor is not None:
            if block < floor[0]:
                continue
            if block == floor[0]:
                tail_floor = floor[1:]
        taken = set(block)
        rest = tuple(x for x in remaining if x not in taken)
        for tail in _partitions(rest, cell_of, n_cells, per_cell, size, tail_floor):
            yield (block,) + tail


def _search(n: int, k: int) -> Iterator[Tuple[IndexPartition, ...]]:
    """Increasing k-tuples of partitions whose intersection cells shrink to singletons."""
    ground = tuple(range(n**k))
    size = n ** (k - 1)

    def extend(chosen: Tuple[IndexPartition, ...], cell_of: List[int], n_cells: int) -> Iterator:
        if len(chosen) == k:
            yield chosen
            return
        per_cell = n ** (k - len(chosen) - 1)
        floor = chosen[-1] if chosen else None
        for partition in _partitions(ground, cell_of, n_cells, per_cell, size, floor):
            block_of: Dict[int, int] = {x: b for b, block in enumerate(partition) for x in block}
            refined = [cell_of[x] * n + block_of[x] for x in ground]
            yield from extend(chosen + (partition,), refined, n_cells * n)

    yield from extend((), [0] * len(ground), 1)


def _to_partition(partition: IndexPartition, ground: Tuple[int, ...]) -> Partition:
    return Partition(ground=ground, blocks=tuple(tuple(x + 1 for x in block) for block in partition))


def nit_partition_count(n: int, k: int) -> int:
    """(n^k)! / ((n^(k-1))!^n · n!): the number of ways to split n^k states into n equal unlabeled blocks."""
    size = n ** (k - 1)
    return math.factorial(n**k) // (math.factorial(size) ** n * math.factorial(n))


def nit_partitions(n: int, k: int, limit: Optional[int] = None, set_limit: Optional[int] = None) -> List[Partition]:
    """
    Every partition of {1..n^k} into n blocks of n^(k-1) states, in lexicographic order.

    Raises:
        GuardExceededError: If n^k exceeds `limit` or the partition count exceeds `set_limit`.

    Example:
        >>> [str(p) for p in nit_partitions(2, 2)]
        ['{{1,2},{3,4}}', '{{1,3},{2,4}}', '{{1,4},{2,3}}']
    """
    total = guard_product_states(n, k, limit)
    _guard_count("Nit partition count", nit_partition_count(n, k), set_limit)
    ground = product_ground(n, k)
    size = n ** (k - 1)
    return [_to_partition(p, ground) for p in _partitions(tuple(range(total)), [0] * total, 1, size, size)]


def _validate_shape(partitions: Sequence[Partition], n: int, k: int) -> None:
    if len(partitions) != k:
        raise InvalidNitSetError(f"Expected {k} partitions, got {len(partitions)}")
    for partition in partitions:
        errors = nit_shape_errors(partition, n, k)
        if errors:
            raise InvalidNitSetError(f"{partition} is not a nit partition: {'; '.join(errors)}")


def is_complete_set(partitions: Sequence[Partition], n: int, k: int) -> bool:
    """
    Check conditions (i) and (ii) over all n^k choices of one block per partition.

    Raises:
        InvalidNitSetError: On a wrong partition count, ground or block shape.
    """
    _validate_shape(partitions, n, k)
    ground = product_ground(n, k)
    position = positions(ground)
    masks = [[to_mask(block, position) for block in p.blocks] for p in partitions]
    full = (1 << len(ground)) - 1
    union = 0
    for choice in itertools.product(*masks):
        cell = full
        for block in choice:
            cell &= block
        if popcount(cell) != 1:
            return False
        union |= cell
    return union == full


def iter_complete_sets(n: int, k: int, limit: Optional[int] = None) -> Iterator[CompleteNitSet]:
    """
    Complete nit sets in search order, produced lazily.

    The first set is the one whose first nit splits the product states into
    consecutive runs, e.g. rows and columns for n=3, k=2.

    Raises:
        GuardExceededError: If n^k exceeds the limit.
    """
    guard_product_states(n, k, limit)
    ground = product_ground(n, k)
    if n == 1:
        yield CompleteNitSet(n=1, k=k, partitions=(Partition.discrete(ground),) * k)
        return
    for chosen in _search(n, k):
        partitions = [_to_partition(p, ground) for p in chosen]
        if not is_complete_set(partitions, n, k):
            logger.warning(f"Discarded a candidate failing the union condition: {chosen}")
            continue
        yield CompleteNitSet.from_partitions(n, k, partitions)


def first_complete_set(n: int, k: int, limit: Optional[int] = None) -> CompleteNitSet:
    """The first set of iter_complete_sets, found without enumerating the others."""
    return next(iter_complete_sets(n, k, limit))


def enumerate_complete_sets(
    n: int, k: int, limit: Optional[int] = None, set_limit: Optional[int] = None
) -> List[CompleteNitSet]:
    """
    All complete nit sets up to reordering of the partitions, sorted by canonical form.

    Args:
        n: Information base.
        k: Number of particles.
        limit: Guard on n^k; defaults to the configured nit ground limit.
        set_limit: Guard on the number of sets; defaults to the configured nit set limit.

    Raises:
        GuardExceededError: If n^k or the number of sets exceeds its limit.
    """
    guard_product_states(n, k, limit)
    _guard_count("Complete set count", count_formula(n, k), set_limit)
    logger.debug(f"Searching complete nit sets for n={n}, k={k}")
    found = {s.canonical_blocks(): s for s in iter_complete_sets(n, k, limit)}
    sets = [found[key] for key in sorted(found)]
    logger.info(f"Enumerated {len(sets)} complete nit sets for n={n}, k={k}")
    return sets


def count_formula(n: int, k: int) -> int:
    """
    (n^k)! / ((n!)^k · k!): labelings of the product states by k coordinates in base n,
    up to renaming the values of each nit and reordering the nits.

    Used to guard enumerations; enumerate_complete_sets stays the authority for k >= 3.

    Example:
        >>> count_formula(2, 3)
        840
    """
    if n < 1 or k < 1:
        raise InvalidNitSetError(f"n and k must be at least 1, got n={n}, k={k}")
    if n == 1:
        return 1
    return math.factorial(n**k) // (math.factorial(n) ** k * math.factorial(k))


def count_formula_k2(n: int) -> int:
    """
    (n²)! / (2·(n!)²): ordered pairs of orthogonal nits number (n²)!/(n!)², halved for the swap.

    Example:
        >>> count_formula_k2(3)
        5040
    """
    if n < 1:
        raise InvalidNitSetError(f"n must be at least 1, got {n}")
    return count_formula(n, 2)


def nit_logic(n: int, k: int, limit: Optional[int] = None) -> PartitionLogic:
    """
    Horizontal sum with one discrete context per complete set, tagged by its export line.
    """
    sets = enumerate_complete_sets(n, k, limit)
    ground = product_ground(n, k)
    discrete = Partition.discrete(ground)
    return horizontal_sum(ground, [discrete] * len(sets), labels=[s.export_line() for s in sets])


def nit_automaton(n: int, k: int, limit: Optional[int] = None) -> MealyAutomaton:
    """
    The automaton of the nit logic: n^k states, one input per complete set and n^k
    outputs; every input reveals the state itself.
    """
    sets = enumerate_complete_sets(n, k, limit)
    ground = product_ground(n, k)
    labels = [str(x) for x in ground]
    automaton = build_automaton(
        states=labels,
        inputs=[str(j + 1) for j in range(len(sets))],
        outputs=labels,
        delta=[[0] * len(sets) for _ in ground],
        lambda_=[[s] * len(sets) for s in range(len(ground))],
    )
    logger.info(f"Built nit automaton with {automaton.n_states} states and {automaton.n_inputs} inputs")
    return automaton


def _canonical_key(partitions: Sequence[Sequence[Block]]) -> Tuple[Tuple[Block, ...], ...]:
    return tuple(sorted(tuple(sorted(tuple(sorted(b)) for b in p)) for p in partitions))


def permutation_orbit(nit_set: CompleteNitSet, limit: Optional[int] = None) -> List[CompleteNitSet]:
    """
    The distinct complete sets obtained by permuting the product states of one set,
    sorted by canonical form.

    Raises:
        GuardExceededError: If (n^k)! exceeds the limit, which defaults to the word limit.
    """
    if limit is None:
        limit = settings.word_limit
    ground = nit_set.ground
    size = math.factorial(len(ground))
    if size > limit:
        raise GuardExceededError("Permutation count", size, limit)

    source = [p.blocks for p in nit_set.partitions]
    keys = set()
    for image in itertools.permutations(ground):
        keys.add(_canonical_key([[[image[x - 1] for x in block] for block in p] for p in source]))
    orbit = [
        CompleteNitSet(
            n=nit_set.n, k=nit_set.k, partitions=tuple(Partition(ground=ground, blocks=p) for p in key)
        )
        for key in keys
    ]
    orbit.sort(key=lambda s: s.canonical_blocks())
    logger.info(f"Permutation orbit of {nit_set.export_line()} has {len(orbit)} sets")
    return orbit


def tessellation_grid(nit_set: CompleteNitSet) -> List[List[int]]:
    """
    Place every product state at (block of the first nit, block of the second nit).

    Raises:
        InvalidNitSetError: Unless k = 2.
    """
    if nit_set.k != 2:
        raise InvalidNitSetError(f"Tessellations need k = 2, got k = {nit_set.k}")
    rows, columns = (p.block_index() for p in nit_set.partitions)
    grid = [[0] * nit_set.n for _ in range(nit_set.n)]
    for x in nit_set.ground:
        grid[rows[x]][columns[x]] = x
    return grid


def format_grid(grid: Sequence[Sequence[int]]) -> str:
    width = max(len(str(x)) for row in grid for x in row)
    return "\n".join(" ".join(str(x).rjust(width) for x in row) for row in grid)


def _rule(widths: Sequence[int]) -> str:
    return "+" + "+".join("-" * (w + 2) for w in widths) + "+"


def render_tessellation(nit_set: CompleteNitSet) -> str:
    """
    Three text panels: the rows of nit 1, the columns of nit 2, and the full grid.
    """
    grid = tessellation_grid(nit_set)
    n = nit_set.n
    width = len(str(n * n))
    cells = [[str(x).rjust(width) for x in row] for row in grid]

    row_rule = _rule([n * (width + 1) - 1])
    nit1 = [row_rule]
    for row in cells:
        nit1 += ["| " + " ".join(row) + " |", row_rule]

    column_rule = _rule([width] * n)
    body = ["| " + " | ".join(row) + " |" for row in cells]
    nit2 = [column_rule] + body + [column_rule]

    both = [column_rule]
    for line in body:
        both += [line, column_rule]

    return "\n".join(["nit 1"] + nit1 + ["", "nit 2"] + nit2 + ["", "nits 1&2"] + both) + "\n"


def export_sets(sets: Sequence[CompleteNitSet]) -> str:
    """One canonical set per line."""
    return "".join(s.export_line() + "\n" for s in sets)


def _group_blocks(blocks: List[Block], n: int) -> List[List[Block]]:
    # blocks of one nit are disjoint, blocks of different nits always meet
    groups: List[List[Block]] = []
    for block in blocks:
        for group in groups:
            if len(group) < n and all(not set(block) & set(other) for other in group):
                group.append(block)
                break
        else:
            groups.append([block])
    return groups


def parse_export(text: str, n: int, k: int, limit: Optional[int] = None) -> List[CompleteNitSet]:
    """
    Parse lines written by export_sets back into complete sets.

    Raises:
        InvalidNitSetError: If n or k is invalid or a line does not describe a complete set.
        GuardExceededError: If n^k exceeds the limit.
    """
    guard_product_states(n, k, limit)
    ground = product_ground(n, k)
    sets = []
    for number, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        blocks = [tuple(int(x) for x in re.split(r"[,\s]+", m.strip())) for m in BLOCK_PATTERN.findall(line)]
        groups = _group_blocks(sorted(blocks), n)
        try:
            partitions = [Partition.from_blocks(group, ground) for group in groups]
        except ValueError as e:
            raise InvalidNitSetError(f"Line {number}: {e}") from e
        if not is_complete_set(partitions, n, k):
            raise InvalidNitSetError(f"Line {number} is not a complete nit set")
        sets.append(CompleteNitSet.from_partitions(n, k, partitions))
    return sets

