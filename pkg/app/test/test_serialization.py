"""
Test Serialization and DOT Export

Tests the versioned JSON envelope for every object kind and the Graphviz
text produced for logics and reversible automata.

Dependencies:
- pytest: For testing framework
- hypothesis: For randomized round trips
- app.helper.serialization: The envelope codec being tested
- app.helper.dot_export: The DOT writer being tested

Author: @kcaparas1630
"""

import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from app.errors.exceptions import (
    AutomatonError,
    GuardExceededError,
    InvalidAutomatonError,
    SerializationError,
    UnsupportedObjectError,
)
from app.helper.dot_export import flow_to_dot, logic_to_dot, to_dot
from app.helper.serialization import dumps, loads, to_envelope
from app.schemas.partitions import Partition
from app.services.automaton_core import build_automaton
from app.services.canonical_examples import get_example, mo3, swap_reversible, urn_fig1
from app.services.counterfactual import CounterfactualAutomaton
from app.services.nit_enumeration import nit_logic
from app.services.partition_logic import horizontal_sum, paste
from app.services.urn_model import urn_from_automaton
from app.test.strategies import automata, partitions


def edge_lines(dot):
    return [line for line in dot.splitlines() if "->" in line]


def node_lines(dot):
    return [line for line in dot.splitlines() if "[label=" in line]


class TestEnvelope:
    """Test envelopes of every kind."""

    @pytest.mark.parametrize("name", ["mo3", "triangle", "urn-fig1", "mo3-logic", "two-trit-first"])
    def test_examples_survive(self, name):
        obj = get_example(name)
        assert loads(dumps(obj)) == obj

    def test_transcript_survives(self):
        automaton = CounterfactualAutomaton(3, ["x", "y"], 7)
        automaton.measure_sequence(automaton.prepare("x", 1), ["y", "x", "y"])
        assert loads(dumps(automaton.transcript)) == automaton.transcript

    def test_tagged_logic_keeps_labels(self):
        logic = nit_logic(2, 2)
        assert loads(dumps(logic)) == logic

    @given(automata(max_states=6, max_inputs=4, max_outputs=4))
    @settings(max_examples=100, derandomize=True)
    def test_random_automata_and_urns(self, automaton):
        assert loads(dumps(automaton)) == automaton
        urn, _ = urn_from_automaton(automaton)
        assert loads(dumps(urn)) == urn

    @given(st.lists(partitions(), min_size=1, max_size=4, unique=True))
    @settings(max_examples=100, derandomize=True)
    def test_random_logics(self, contexts):
        for logic in (paste(range(5), contexts), horizontal_sum(range(5), contexts)):
            assert loads(dumps(logic)) == logic

    def test_automaton_payload(self):
        data = json.loads(dumps(mo3()))
        assert data["kind"] == "automaton"
        assert data["version"] == "1"
        assert data["payload"]["lambda"][0] == [1, 0, 0]

    def test_nitset_payload(self):
        envelope = to_envelope(get_example("two-trit-first"))
        assert envelope.payload == {
            "n": 3,
            "k": 2,
            "export": "{{1, 2, 3}, {1, 4, 5}, {2, 6, 7}, {3, 8, 9}, {4, 6, 8}, {5, 7, 9}}",
        }

    def test_unknown_version(self):
        text = json.dumps({"kind": "urn", "version": "2", "payload": {}})
        with pytest.raises(SerializationError):
            loads(text)

    def test_unknown_kind(self):
        with pytest.raises(SerializationError):
            loads(json.dumps({"kind": "matrix", "version": "1", "payload": {}}))

    def test_not_json(self):
        with pytest.raises(SerializationError):
            loads("{kind")

    def test_missing_field(self):
        envelope = json.loads(dumps(urn_fig1()))
        del envelope["payload"]["lookup"]
        with pytest.raises(SerializationError):
            loads(json.dumps(envelope))

    def test_invalid_table_keeps_diagnostics(self):
        envelope = json.loads(dumps(mo3()))
        envelope["payload"]["delta"][0][0] = 9
        with pytest.raises(InvalidAutomatonError):
            loads(json.dumps(envelope))

    def test_unsupported_object(self):
        with pytest.raises(SerializationError):
            dumps(Partition.trivial([1, 2]))

    def test_oversized_nitset_is_refused(self):
        text = json.dumps({"kind": "nitset", "version": "1", "payload": {"n": 100000, "k": 3, "export": "{{1}}"}})
        with pytest.raises(GuardExceededError):
            loads(text)

    @pytest.mark.parametrize("n,k", [("3", 2), (3, None), (True, 2), (0, 2)])
    def test_malformed_nitset_parameters(self, n, k):
        text = json.dumps({"kind": "nitset", "version": "1", "payload": {"n": n, "k": k, "export": "{{1}}"}})
        with pytest.raises(AutomatonError):
            loads(text)


class TestDot:
    """Test the Graphviz writers."""

    def test_mo3_hasse_diagram(self):
        dot = logic_to_dot(get_example("mo3-logic"))
        assert dot.startswith("digraph logic {")
        assert len(node_lines(dot)) == 8
        assert len(edge_lines(dot)) == 12
        assert 'n0 [label="∅"];' in dot

    def test_boolean_diamond(self):
        dot = logic_to_dot(paste([1, 2], [Partition.from_blocks([[1], [2]])]))
        assert len(node_lines(dot)) == 4
        assert edge_lines(dot) == ["  n0 -> n1;", "  n0 -> n2;", "  n1 -> n3;", "  n2 -> n3;"]

    def test_swap_flow(self):
        dot = flow_to_dot(swap_reversible())
        assert dot.startswith("digraph flow {")
        assert 'n0 [label="(1,0)"];' in dot
        assert edge_lines(dot) == ["  n0 -> n1;", "  n1 -> n0;", "  n2 -> n3;", "  n3 -> n2;"]

    def test_deterministic(self):
        assert to_dot(get_example("triangle-logic")) == to_dot(get_example("triangle-logic"))

    def test_irreversible_refused(self):
        merging = build_automaton(["1"], ["0", "1"], ["0", "1"], [[0, 0]], [[0, 0]])
        with pytest.raises(UnsupportedObjectError):
            flow_to_dot(merging)

    def test_urn_refused(self):
        with pytest.raises(UnsupportedObjectError):
            to_dot(urn_fig1())
