"""
Description:
Graphviz DOT text for partition logics (Hasse diagrams) and reversible automata
(flow diagrams over the (state, input) configurations).

Node identifiers are n0, n1, ... in a fixed order: logic elements from the empty
set upwards, configurations in row-major order. Edges are sorted by their
endpoints so equal objects always yield identical text.

Dependencies:
- app.services.partition_logic: For elements and the covering relation.
- app.services.reversible: For the combined map.

Author: @kcaparas1630
"""
from typing import Dict, List, Sequence, Tuple

from app.errors.exceptions import UnsupportedObjectError
from app.schemas.automaton import MealyAutomaton
from app.schemas.logic import LogicElement, PartitionLogic
from app.services.partition_logic import elements, hasse_diagram
from app.services.reversible import combined_map, is_reversible

GRAPH_ATTRIBUTES = 'rankdir=BT;\n  node [shape=plaintext fontname="palatino"];\n  edge [arrowhead=none];'
FLOW_ATTRIBUTES = 'rankdir=LR;\n  node [shape=circle fontname="palatino"];\n  edge [arrowhead=vee arrowsize=.7];'


def _quote(text: str) -> str:
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


def _digraph(name: str, attributes: str, labels: Sequence[str], edges: List[Tuple[int, int]]) -> str:
    lines = [f"digraph {name} {{", f"  {attributes}"]
    lines += [f"  n{j} [label={_quote(label)}];" for j, label in enumerate(labels)]
    lines += [f"  n{a} -> n{b};" for a, b in sorted(edges)]
    lines.append("}")
    return "\n".join(lines) + "\n"


def logic_to_dot(logic: PartitionLogic) -> str:
    """Hasse diagram: one node per element in set notation, one edge per cover."""
    nodes = elements(logic)
    index: Dict[LogicElement, int] = {element: j for j, element in enumerate(nodes)}
    graph = hasse_diagram(logic)
    edges = [(index[lower], index[upper]) for lower, upper in graph.edges]
    return _digraph("logic", GRAPH_ATTRIBUTES, [e.label() for e in nodes], edges)


def flow_to_dot(automaton: MealyAutomaton) -> str:
    """
    Flow diagram of a reversible automaton: one node "(s,i)" per configuration and
    one edge to its image under the combined map.

    Raises:
        UnsupportedObjectError: If the automaton is not reversible.
    """
    if not is_reversible(automaton):
        raise UnsupportedObjectError("irreversible automaton")
    mapping = combined_map(automaton)
    labels = [f"({automaton.states[s]},{automaton.inputs[i]})" for s, i in mapping.domain]
    edges = [(mapping.index(source), mapping.index(target)) for source, target in zip(mapping.domain, mapping.image)]
    return _digraph("flow", FLOW_ATTRIBUTES, labels, edges)


def to_dot(obj: object) -> str:
    """
    Dispatch on the object kind.

    Raises:
        UnsupportedObjectError: For anything but a logic or a reversible automaton.
    """
    if isinstance(obj, PartitionLogic):
        return logic_to_dot(obj)
    if isinstance(obj, MealyAutomaton):
        return flow_to_dot(obj)
    raise UnsupportedObjectError(type(obj).__name__)
