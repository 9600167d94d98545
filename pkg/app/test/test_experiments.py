"""
Test Experiments Module

Tests state partitions induced by input words, finest partitions,
information destruction and complementarity.

Dependencies:
- pytest: For testing framework
- hypothesis: For randomized automata
- app.services.experiments: The module being tested

Author: @kcaparas1630
"""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from app.errors.exceptions import EmptyWordError, GuardExceededError, OutOfRangeError
from app.schemas.partitions import Partition
from app.services.automaton_core import build_automaton
from app.services.canonical_examples import identity, mo3, triangle
from app.services.experiments import (
    complementary_pairs,
    experiment_closure,
    experimental_partitions,
    finest_partitions,
    is_information_destroying,
    logic_from_automaton,
    partition_for_word,
    word_count,
    words,
)
from app.services.partition_logic import atoms, element_count, refines
from app.test.strategies import automata


def labelled(automaton, partitions):
    return {p.format(automaton.states) for p in partitions}


def shift_automaton():
    """Input a rotates four states silently; input b only reveals whether the state is the first."""
    return build_automaton(
        states=["1", "2", "3", "4"],
        inputs=["a", "b"],
        outputs=["0", "1"],
        delta=[[(s + 1) % 4, s] for s in range(4)],
        lambda_=[[0, int(s == 0)] for s in range(4)],
    )


class TestPartitionForWord:
    """Test partition_for_word."""

    def setup_method(self):
        self.mo3 = mo3()

    def test_single_symbol(self):
        """Word (1) splits MO3 into {{1},{2,3}}."""
        assert partition_for_word(self.mo3, ["1"]).format(self.mo3.states) == "{{1},{2,3}}"

    def test_second_symbol_adds_nothing(self):
        """After one step every state is state 1, so (1,1) gives the same partition as (1)."""
        assert partition_for_word(self.mo3, ["1", "1"]) == partition_for_word(self.mo3, ["1"])

    def test_empty_word_is_trivial(self):
        assert partition_for_word(self.mo3, []).is_trivial()

    @given(automata(), st.data())
    @settings(max_examples=100, derandomize=True)
    def test_refinement_monotonicity(self, automaton, data):
        """Extending a word can only refine its partition."""
        word = data.draw(st.lists(st.integers(0, automaton.n_inputs - 1), max_size=4))
        x = data.draw(st.integers(0, automaton.n_inputs - 1))
        assert refines(partition_for_word(automaton, word + [x]), partition_for_word(automaton, word))


class TestExperimentalPartitions:
    """Test experimental_partitions and the experiment closure."""

    def test_mo3_depth_two(self):
        """MO3 with words up to length 2 yields the three two-block partitions and the trivial one."""
        automaton = mo3()
        found = experimental_partitions(automaton, 2)
        assert labelled(automaton, found) == {"{{1},{2,3}}", "{{1,3},{2}}", "{{1,2},{3}}", "{{1,2,3}}"}
        assert found[0].is_trivial()

    def test_identity_reveals_state(self):
        """One input of the identity automaton gives the discrete partition."""
        automaton = identity()
        assert labelled(automaton, experimental_partitions(automaton, 1)) == {"{{1},{2},{3}}", "{{1,2,3}}"}

    def test_single_state(self):
        """A 1-state automaton has only the trivial partition at every depth."""
        automaton = build_automaton(["s"], ["a", "b"], ["x", "y"], [[0, 0]], [[0, 1]])
        for depth in range(4):
            assert experimental_partitions(automaton, depth) == [Partition.trivial([0])]

    def test_negative_depth(self):
        with pytest.raises(OutOfRangeError):
            experimental_partitions(mo3(), -1)

    def test_default_depth_can_miss_partitions(self):
        """
        Words of length |S|-1 are not always enough: in the shift automaton only
        words containing aaab isolate state 2.
        """
        automaton = shift_automaton()
        target = Partition.from_blocks([[1], [0, 2, 3]])
        assert target not in experimental_partitions(automaton)
        assert target in experimental_partitions(automaton, 4)
        assert partition_for_word(automaton, "aaab") == target
        assert target in experiment_closure(automaton).partitions

    @given(automata(max_states=4))
    @settings(max_examples=100, derandomize=True)
    def test_closure_contains_every_depth(self, automaton):
        """The closure holds every partition found at any finite depth."""
        closure = experiment_closure(automaton)
        found = set(experimental_partitions(automaton, automaton.n_states + 2))
        assert found <= set(closure.partitions)
        assert set(experimental_partitions(automaton, closure.depth)) == set(closure.partitions)

    @given(automata(max_states=4))
    @settings(max_examples=100, derandomize=True)
    def test_constant_transitions_saturate_after_one_symbol(self, automaton):
        """When δ is constant, the second symbol never refines anything."""
        collapsed = build_automaton(
            automaton.states,
            automaton.inputs,
            automaton.outputs,
            [[0] * automaton.n_inputs for _ in automaton.states],
            automaton.lambda_,
        )
        assert set(experimental_partitions(collapsed, 1)) == set(experiment_closure(collapsed).partitions)

    @given(automata())
    @settings(max_examples=50, derandomize=True)
    def test_partitions_are_canonical(self, automaton):
        for partition in experimental_partitions(automaton):
            assert Partition.from_blocks(partition.blocks, partition.ground) == partition


class TestFinestPartitions:
    """Test finest_partitions."""

    def test_mo3(self):
        automaton = mo3()
        assert labelled(automaton, finest_partitions(automaton)) == {"{{1},{2,3}}", "{{1,3},{2}}", "{{1,2},{3}}"}

    def test_identity(self):
        automaton = identity()
        assert labelled(automaton, finest_partitions(automaton)) == {"{{1},{2},{3}}"}

    def test_triangle(self):
        """The triangle automaton yields its three three-block partitions."""
        automaton = triangle()
        assert labelled(automaton, finest_partitions(automaton)) == {
            "{{1},{2},{3,4}}",
            "{{1},{2,4},{3}}",
            "{{1,4},{2},{3}}",
        }

    def test_trivial_only_when_nothing_else(self):
        automaton = build_automaton(["1", "2"], ["a"], ["x"], [[0], [1]], [[0], [0]])
        assert finest_partitions(automaton) == [Partition.trivial([0, 1])]

    def test_logic_from_mo3(self):
        """The pasted logic of MO3 has the three finest partitions as contexts, 6 atoms and 8 elements."""
        logic = logic_from_automaton(mo3())
        assert logic.context_count == 3
        assert len(atoms(logic)) == 6
        assert element_count(logic) == 8


class TestInformationDestroying:
    """Test is_information_destroying."""

    def test_mo3(self):
        assert is_information_destroying(mo3(), ["1"])

    def test_identity(self):
        automaton = identity()
        assert not is_information_destroying(automaton, ["1", "2", "1"])

    def test_triangle(self):
        assert is_information_destroying(triangle(), ["2"])

    def test_empty_word(self):
        with pytest.raises(EmptyWordError):
            is_information_destroying(mo3(), [])


class TestComplementarity:
    """Test complementary_pairs."""

    def test_mo3(self):
        """All three input pairs of MO3 are complementary."""
        assert complementary_pairs(mo3(), 1) == [((0,), (1,)), ((0,), (2,)), ((1,), (2,))]

    def test_identity(self):
        assert complementary_pairs(identity(), 2) == []

    def test_triangle(self):
        assert complementary_pairs(triangle(), 1) == [((0,), (1,)), ((0,), (2,)), ((1,), (2,))]

    def test_guard(self):
        """Enumerating more words than the limit is refused."""
        with pytest.raises(GuardExceededError):
            complementary_pairs(mo3(), 3, limit=10)

    def test_zero_length(self):
        with pytest.raises(OutOfRangeError):
            complementary_pairs(mo3(), 0)

    def test_zero_limit_is_honoured(self):
        """An explicit limit of 0 refuses every enumeration instead of falling back to the default."""
        with pytest.raises(GuardExceededError):
            complementary_pairs(mo3(), 1, limit=0)


class TestWords:
    """Test word enumeration order."""

    def test_length_then_lexicographic(self):
        assert list(words(2, 2)) == [(), (0,), (1,), (0, 0), (0, 1), (1, 0), (1, 1)]

    def test_count(self):
        assert word_count(3, 2, min_len=1) == 12
