"""
Test Partition Logic Module

Tests refinement, pasting, horizontal sums, two-valued states and the
construction of automata from logics.

Dependencies:
- pytest: For testing framework
- hypothesis: For randomized partitions and automata
- networkx: For inspecting Hasse diagrams
- app.services.partition_logic: The module being tested

Author: @kcaparas1630
"""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from app.errors.exceptions import (
    EmptyLogicError,
    GroundMismatchError,
    GuardExceededError,
    ModeMismatchError,
)
from app.schemas.logic import LogicElement, LogicMode, PartitionLogic, TwoValuedState
from app.schemas.partitions import Partition
from app.services.canonical_examples.examples_service import mo3_logic, triangle_logic
from app.services.experiments import finest_partitions, logic_from_automaton
from app.services.partition_logic import (
    atoms,
    automaton_from_logic,
    element_count,
    elements,
    hasse_diagram,
    horizontal_sum,
    is_boolean,
    is_separating,
    leq,
    paste,
    point_induced_states,
    refines,
    two_valued_states,
)
from app.test.strategies import automata, partitions


def blocks(*groups):
    return Partition.from_blocks(groups)


class TestRefines:
    """Test the refinement order."""

    def test_discrete_refines_everything(self):
        assert refines(blocks([1], [2], [3]), blocks([1], [2, 3]))

    def test_crossing_blocks(self):
        assert not refines(blocks([1], [2, 3]), blocks([2], [1, 3]))

    def test_reflexive(self):
        p = blocks([1, 3], [2])
        assert refines(p, p)

    def test_ground_mismatch(self):
        with pytest.raises(GroundMismatchError):
            refines(blocks([1], [2]), blocks([1, 2, 3]))

    @given(partitions(), partitions(), partitions())
    @settings(max_examples=100, derandomize=True)
    def test_transitive(self, p, q, r):
        if refines(p, q) and refines(q, r):
            assert refines(p, r)


class TestPaste:
    """Test pasting and the derived views."""

    def test_mo3_lantern(self):
        """MO3 has 6 atoms and 8 elements, and no context holds them all."""
        logic = mo3_logic()
        assert len(atoms(logic)) == 6
        assert element_count(logic) == 8
        assert len(elements(logic)) == 8
        assert not is_boolean(logic)

    def test_mo3_hasse_diagram(self):
        """0 lies under each of the 6 atoms and each atom lies under 1."""
        graph = hasse_diagram(mo3_logic())
        assert graph.number_of_nodes() == 8
        assert graph.number_of_edges() == 12
        bottom, top = LogicElement(members=()), LogicElement(members=(1, 2, 3))
        assert graph.out_degree(bottom) == 6
        assert graph.in_degree(top) == 6

    def test_atoms_are_not_ordered_across_contexts(self):
        """{1} and {1,2} belong to different contexts of MO3 and are incomparable."""
        logic = mo3_logic()
        one, one_two = LogicElement(members=(1,)), LogicElement(members=(1, 2))
        assert not leq(logic, one, one_two)
        assert leq(logic, one, LogicElement(members=(1, 2, 3)))

    def test_single_partition_is_boolean(self):
        logic = paste([1, 2], [blocks([1], [2])])
        assert element_count(logic) == 4
        assert is_boolean(logic)

    def test_triangle_shares_atoms(self):
        """{1}, {2} and {3} each belong to two contexts."""
        logic = triangle_logic()
        assert len(atoms(logic)) == 6
        for shared in ((1,), (2,), (3,)):
            owners = [c for c, context in enumerate(logic.contexts) if shared in context.blocks]
            assert len(owners) == 2

    def test_ground_mismatch(self):
        with pytest.raises(GroundMismatchError):
            paste([1, 2, 3], [blocks([1], [2])])

    def test_idempotent(self):
        logic = triangle_logic()
        assert paste(logic.ground, logic.contexts) == logic
        assert paste(logic.ground, list(logic.contexts) * 2) == logic


class TestHorizontalSum:
    """Test horizontal sums."""

    def test_two_discrete_contexts(self):
        ground = range(1, 10)
        logic = horizontal_sum(ground, [Partition.discrete(ground)] * 2)
        assert logic.mode == LogicMode.CONTEXT_TAGGED
        assert element_count(logic) == 2 * (2**9 - 2) + 2

    def test_single_context_matches_paste(self):
        context = blocks([1], [2, 3], [4])
        assert element_count(horizontal_sum([1, 2, 3, 4], [context])) == element_count(paste([1, 2, 3, 4], [context]))

    def test_equal_blocks_stay_apart(self):
        """The same block in two contexts yields two atoms."""
        logic = horizontal_sum([1, 2], [blocks([1], [2])] * 2)
        assert len(atoms(logic)) == 4

    @given(st.lists(partitions(), min_size=1, max_size=4))
    @settings(max_examples=100, derandomize=True)
    def test_element_count_formula(self, contexts):
        logic = horizontal_sum(range(5), contexts)
        assert element_count(logic) == len(elements(logic))
        assert element_count(logic) == sum(2**c.block_count - 2 for c in contexts) + 2


class TestTwoValuedStates:
    """Test two-valued states, point-induced states and separation."""

    def test_mo3(self):
        logic = mo3_logic()
        states = two_valued_states(logic)
        assert len(states) == 8
        assert len(point_induced_states(logic)) == 3
        assert is_separating(logic, states)

    def test_triangle(self):
        logic = triangle_logic()
        states = two_valued_states(logic)
        points = point_induced_states(logic)
        assert len(states) == 4
        assert set(states) == set(points)
        assert is_separating(logic, points)

    def test_single_partition(self):
        assert len(two_valued_states(paste([1, 2], [blocks([1], [2])]))) == 2

    def test_discrete_partition_points(self):
        logic = paste(range(5), [Partition.discrete(range(5))])
        assert len(point_induced_states(logic)) == 5

    def test_single_point_does_not_separate(self):
        """Ground element 1 gives {2} and {3} the same value 0."""
        logic = mo3_logic()
        state = point_induced_states(logic)[0]
        assert not is_separating(logic, [state])

    def test_lexicographic_order(self):
        states = two_valued_states(mo3_logic())
        assert [s.choices for s in states] == sorted(s.choices for s in states)

    def test_guard(self):
        with pytest.raises(GuardExceededError):
            two_valued_states(mo3_logic(), limit=7)
        with pytest.raises(GuardExceededError):
            two_valued_states(mo3_logic(), limit=0)

    def test_horizontal_sum_points_refused(self):
        logic = horizontal_sum([1, 2], [blocks([1], [2])])
        with pytest.raises(ModeMismatchError):
            point_induced_states(logic)

    def test_horizontal_sum_is_unconstrained(self):
        logic = horizontal_sum([1, 2, 3], [blocks([1], [2, 3]), blocks([1, 2], [3])])
        assert len(two_valued_states(logic)) == 4

    def test_assignment(self):
        logic = mo3_logic()
        state = TwoValuedState(choices=(0, 1, 1))
        values = state.assignment(logic)
        assert sum(values.values()) == logic.context_count

    @given(automata(max_states=4, max_inputs=3))
    @settings(max_examples=100, derandomize=True)
    def test_points_are_states(self, automaton):
        logic = logic_from_automaton(automaton)
        assert set(point_induced_states(logic)) <= set(two_valued_states(logic))


class TestAutomatonFromLogic:
    """Test the converse construction."""

    def test_mo3(self):
        automaton = automaton_from_logic(mo3_logic())
        assert (automaton.n_states, automaton.n_inputs, automaton.n_outputs) == (3, 3, 2)
        assert set(finest_partitions(automaton)) == {
            Partition.from_blocks(b, [0, 1, 2]) for b in ([[0], [1, 2]], [[1], [0, 2]], [[2], [0, 1]])
        }

    def test_triangle(self):
        automaton = automaton_from_logic(triangle_logic())
        assert (automaton.n_states, automaton.n_inputs, automaton.n_outputs) == (4, 3, 3)
        assert automaton.states == ("1", "2", "3", "4")
        assert {p.format(automaton.states) for p in finest_partitions(automaton)} == {
            "{{1},{2},{3,4}}",
            "{{1},{2,4},{3}}",
            "{{1,4},{2},{3}}",
        }

    def test_single_partition(self):
        automaton = automaton_from_logic(paste([1, 2], [blocks([1], [2])]))
        assert (automaton.n_states, automaton.n_inputs, automaton.n_outputs) == (2, 1, 2)

    def test_empty_logic(self):
        with pytest.raises(EmptyLogicError):
            automaton_from_logic(PartitionLogic(ground=(1, 2), contexts=()))

    def test_horizontal_sum_refused(self):
        with pytest.raises(ModeMismatchError):
            automaton_from_logic(horizontal_sum([1, 2], [blocks([1], [2])]))

    @given(automata(max_states=5, max_inputs=3))
    @settings(max_examples=100, derandomize=True)
    def test_round_trip(self, automaton):
        """Only the finest partitions survive automaton -> logic -> automaton."""
        rebuilt = automaton_from_logic(logic_from_automaton(automaton))
        assert set(finest_partitions(rebuilt)) == set(finest_partitions(automaton))
