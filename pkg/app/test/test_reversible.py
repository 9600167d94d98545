"""
Test Reversible Automata Module

Tests the combined map, permutation matrices, cycle forms and the evolution
of one-hot configurations.

Dependencies:
- pytest: For testing framework
- hypothesis: For random permutations
- numpy: For matrix comparisons
- app.services.reversible: The module being tested

Author: @kcaparas1630
"""

import numpy as np
import pytest
from hypothesis import given, settings

from app.errors.exceptions import NotReversibleError, OutOfRangeError, PermutationSizeError
from app.schemas.reversible import Configuration
from app.services.automaton_core import build_automaton
from app.services.canonical_examples import mo3, swap_reversible
from app.services.reversible import (
    automaton_from_permutation,
    combined_image,
    combined_map,
    cycle_form,
    cycles_of,
    evolve,
    format_cycles,
    inverse,
    is_reversible,
    permutation_from_cycles,
    permutation_matrix,
    permutation_order,
)
from app.test.strategies import reversible_automata


def merging_automaton():
    """Both inputs of the single state lead to the same configuration."""
    return build_automaton(["1"], ["0", "1"], ["0", "1"], [[0, 0]], [[0, 0]])


def four_cycle():
    return automaton_from_permutation(permutation_from_cycles([[1, 2, 3, 4]], 4), 2, 2)


class TestCombinedMap:
    """Test the combined map and the reversibility check."""

    def test_swap(self):
        mapping = combined_map(swap_reversible())
        assert mapping.as_permutation() == (1, 0, 3, 2)
        assert is_reversible(swap_reversible())

    def test_outputs_must_equal_inputs(self):
        with pytest.raises(NotReversibleError) as info:
            is_reversible(mo3())
        assert info.value.detail == "not reversible: outputs ≠ inputs"

    def test_merging_is_not_reversible(self):
        assert not is_reversible(merging_automaton())
        with pytest.raises(NotReversibleError):
            permutation_matrix(merging_automaton())


class TestPermutationMatrix:
    """Test the matrix representation."""

    def test_swap_matrix(self):
        assert permutation_matrix(swap_reversible()).tolist() == [
            [0, 1, 0, 0],
            [1, 0, 0, 0],
            [0, 0, 0, 1],
            [0, 0, 1, 0],
        ]

    def test_swap_cycles(self):
        assert format_cycles(cycle_form(swap_reversible())) == "(1,2)(3,4)"
        assert permutation_order(swap_reversible()) == 2

    @given(reversible_automata())
    @settings(max_examples=200, derandomize=True)
    def test_matrix_is_orthogonal(self, automaton):
        matrix = permutation_matrix(automaton)
        n = matrix.shape[0]
        assert np.array_equal(matrix @ matrix.T, np.eye(n, dtype=np.int64))
        assert (matrix.sum(axis=0) == 1).all()
        assert (matrix.sum(axis=1) == 1).all()

    @given(reversible_automata())
    @settings(max_examples=200, derandomize=True)
    def test_permutation_round_trip(self, automaton):
        """Rebuilding the automaton from its permutation gives it back."""
        permutation = combined_map(automaton).as_permutation()
        rebuilt = automaton_from_permutation(
            permutation, automaton.n_states, automaton.n_inputs, automaton.states, automaton.inputs
        )
        assert rebuilt == automaton

    @given(reversible_automata())
    @settings(max_examples=200, derandomize=True)
    def test_inverse_is_transpose(self, automaton):
        assert np.array_equal(permutation_matrix(inverse(automaton)), permutation_matrix(automaton).T)


class TestCycles:
    """Test cycle notation."""

    def test_cycles_of(self):
        assert cycles_of((1, 2, 0, 3)) == [(1, 2, 3), (4,)]

    def test_from_cycles(self):
        assert permutation_from_cycles([[1, 2], [3, 4]], 4) == (1, 0, 3, 2)
        assert permutation_from_cycles([[2, 3]], 4) == (0, 2, 1, 3)

    def test_from_cycles_rejects_repeats(self):
        with pytest.raises(OutOfRangeError):
            permutation_from_cycles([[1, 2], [2, 3]], 4)
        with pytest.raises(OutOfRangeError):
            permutation_from_cycles([[1, 5]], 4)

    def test_inverse_of_four_cycle(self):
        automaton = four_cycle()
        assert format_cycles(cycle_form(automaton)) == "(1,2,3,4)"
        assert format_cycles(cycle_form(inverse(automaton))) == "(1,4,3,2)"
        assert permutation_order(automaton) == 4

    def test_size_mismatch(self):
        with pytest.raises(PermutationSizeError):
            automaton_from_permutation([0, 1, 2], 2, 2)

    def test_not_a_permutation(self):
        with pytest.raises(OutOfRangeError):
            automaton_from_permutation([0, 0, 1, 2], 2, 2)


class TestEvolve:
    """Test the evolution of configurations."""

    def test_swap_twice_is_identity(self):
        automaton = swap_reversible()
        for index in range(4):
            start = Configuration.one_hot(index, 4)
            assert evolve(automaton, start, 1) != start
            assert evolve(automaton, start, 2) == start

    def test_one_step(self):
        evolved = evolve(four_cycle(), Configuration.one_hot(0, 4), 1)
        assert evolved.index == 1

    def test_order_returns_home(self):
        automaton = four_cycle()
        start = Configuration.one_hot(2, 4)
        assert evolve(automaton, start, permutation_order(automaton)) == start
        assert evolve(automaton, start, 0) == start

    def test_negative_steps(self):
        with pytest.raises(OutOfRangeError):
            evolve(four_cycle(), Configuration.one_hot(0, 4), -1)

    def test_wrong_length(self):
        with pytest.raises(OutOfRangeError):
            evolve(four_cycle(), Configuration.one_hot(0, 3), 1)

    @given(reversible_automata())
    @settings(max_examples=100, derandomize=True)
    def test_every_configuration_returns(self, automaton):
        order = permutation_order(automaton)
        size = automaton.n_states * automaton.n_inputs
        for index in range(size):
            start = Configuration.one_hot(index, size)
            assert evolve(automaton, start, order) == start


class TestCombinedImage:
    """Test that reversible automata never merge configurations."""

    def test_merging(self):
        assert combined_image(merging_automaton(), 1) == frozenset({(0, 0)})

    @given(reversible_automata())
    @settings(max_examples=100, derandomize=True)
    def test_reversible_keeps_everything(self, automaton):
        domain = frozenset(combined_map(automaton).domain)
        for steps in range(4):
            assert combined_image(automaton, steps) == domain
