"""
Description:
Subcommand drivers of the command-line front end. Each driver loads its input,
calls one library operation and returns the text to print.

Dependencies:
- argparse: For the parsed arguments handed to every driver.
- app.helper.serialization: For reading and writing envelopes.

Author: @kcaparas1630
"""
import argparse
import json
import sys

from app.errors.exceptions import SerializationError
from app.helper.dot_export import to_dot
from app.helper.serialization import Serializable, dumps, loads
from app.schemas.automaton import MealyAutomaton
from app.schemas.logic import LogicMode, PartitionLogic
from app.schemas.urn import UrnModel
from app.services.canonical_examples import get_example
from app.services.counterfactual import CounterfactualAutomaton, transcript_lines
from app.services.experiments import experimental_partitions, finest_partitions, logic_from_automaton
from app.services.nit_enumeration import (
    count_formula_k2,
    enumerate_complete_sets,
    export_sets,
    guard_product_states,
)
from app.services.partition_logic import is_separating, point_induced_states, two_valued_states
from app.services.reversible import cycle_form, format_cycles, permutation_matrix, permutation_order
from app.services.urn_model import automaton_from_urn, urn_from_automaton, urn_logic


def load_input(args: argparse.Namespace) -> Serializable:
    """The object named by --example, or the envelope read from --input ("-" for stdin)."""
    if getattr(args, "example", None):
        return get_example(args.example)
    if args.input == "-":
        return loads(sys.stdin.read())
    with open(args.input, encoding="utf-8") as handle:
        return loads(handle.read())


def _expect(obj: Serializable, *types: type):
    if not isinstance(obj, types):
        expected = " or ".join(t.__name__ for t in types)
        raise SerializationError(f"Expected {expected}, got {type(obj).__name__}")
    return obj


def _as_logic(obj: Serializable, max_len=None) -> PartitionLogic:
    if isinstance(obj, MealyAutomaton):
        return logic_from_automaton(obj, max_len)
    if isinstance(obj, UrnModel):
        return urn_logic(obj)
    return _expect(obj, PartitionLogic)


def _json(data) -> str:
    return json.dumps(data, indent=2, ensure_ascii=False) + "\n"


def cmd_example(args: argparse.Namespace) -> str:
    return dumps(get_example(args.name)) + "\n"


def cmd_partitions(args: argparse.Namespace) -> str:
    automaton = _expect(load_input(args), MealyAutomaton)
    partitions = experimental_partitions(automaton, args.max_len)
    finest = finest_partitions(automaton, args.max_len)
    return _json(
        {
            "max_len": args.max_len,
            "partitions": [p.format(automaton.states) for p in partitions],
            "finest": [p.format(automaton.states) for p in finest],
        }
    )


def cmd_logic(args: argparse.Namespace) -> str:
    return dumps(_as_logic(load_input(args), args.max_len)) + "\n"


def cmd_states(args: argparse.Namespace) -> str:
    logic = _as_logic(load_input(args), args.max_len)
    states = two_valued_states(logic, args.limit)
    result = {
        "count": len(states),
        "separating": is_separating(logic, states),
        "states": [[list(block) for block in state.chosen_blocks(logic)] for state in states],
    }
    if logic.mode == LogicMode.SET_IDENTIFIED:
        result["point_induced"] = len(point_induced_states(logic))
    return _json(result)


def cmd_to_urn(args: argparse.Namespace) -> str:
    urn, _ = urn_from_automaton(_expect(load_input(args), MealyAutomaton))
    return dumps(urn) + "\n"


def cmd_from_urn(args: argparse.Namespace) -> str:
    automaton, _ = automaton_from_urn(_expect(load_input(args), UrnModel))
    return dumps(automaton) + "\n"


def cmd_reversible(args: argparse.Namespace) -> str:
    automaton = _expect(load_input(args), MealyAutomaton)
    matrix = permutation_matrix(automaton)
    return _json(
        {
            "reversible": True,
            "cycle_form": format_cycles(cycle_form(automaton)),
            "order": permutation_order(automaton),
            "matrix": matrix.tolist(),
        }
    )


def cmd_measure(args: argparse.Namespace) -> str:
    automaton = CounterfactualAutomaton(args.n, args.modes.split(","), args.seed)
    state = automaton.prepare(args.prepare_mode, args.prepare_value)
    automaton.measure_sequence(state, args.sequence.split(","))
    if args.envelope:
        return dumps(automaton.transcript) + "\n"
    return transcript_lines(automaton.transcript)


def cmd_enumerate_nits(args: argparse.Namespace) -> str:
    if args.count_only and args.k == 2 and args.formula:
        guard_product_states(args.n, 2, args.limit)
        return f"{count_formula_k2(args.n)}\n"
    sets = enumerate_complete_sets(args.n, args.k, args.limit)
    if args.count_only:
        return f"{len(sets)}\n"
    return export_sets(sets)


def cmd_dot(args: argparse.Namespace) -> str:
    return to_dot(load_input(args))


COMMANDS = {
    "example": cmd_example,
    "partitions": cmd_partitions,
    "logic": cmd_logic,
    "states": cmd_states,
    "to-urn": cmd_to_urn,
    "from-urn": cmd_from_urn,
    "reversible": cmd_reversible,
    "measure": cmd_measure,
    "enumerate-nits": cmd_enumerate_nits,
    "dot": cmd_dot,
}
