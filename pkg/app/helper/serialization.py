"""
Description:
JSON serialization of automata, urn models, logics, complete nit sets and
measurement transcripts in a versioned envelope.

Payloads:
- automaton: {states, inputs, outputs, delta, lambda} with rows = states, columns = inputs
- urn: {ball_types, colors, symbols, lookup}
- logic: {ground, mode, contexts, context_labels}
- nitset: {n, k, export} where export is the one-line canonical form
- transcript: {records: [{call_index, mode, output, state_mode, state_value}, ...]}

Dependencies:
- pydantic: For the envelope and payload validation.
- loguru: For logging rejected input.

Author: @kcaparas1630
"""
import json
from typing import Any, Dict, List, Union

from loguru import logger
from pydantic import ValidationError

from app.errors.exceptions import AutomatonError, SerializationError
from app.schemas.automaton import MealyAutomaton
from app.schemas.counterfactual import TranscriptRecord
from app.schemas.envelope import Envelope, EnvelopeKind
from app.schemas.logic import LogicMode, PartitionLogic
from app.schemas.nits import CompleteNitSet
from app.schemas.partitions import Partition
from app.schemas.urn import UrnModel
from app.services.automaton_core import build_automaton
from app.services.nit_enumeration import parse_export

Serializable = Union[MealyAutomaton, UrnModel, PartitionLogic, CompleteNitSet, List[TranscriptRecord]]


def _automaton_payload(automaton: MealyAutomaton) -> Dict[str, Any]:
    return {
        "states": list(automaton.states),
        "inputs": list(automaton.inputs),
        "outputs": list(automaton.outputs),
        "delta": [list(row) for row in automaton.delta],
        "lambda": [list(row) for row in automaton.lambda_],
    }


def _logic_payload(logic: PartitionLogic) -> Dict[str, Any]:
    return {
        "ground": list(logic.ground),
        "mode": logic.mode.value,
        "contexts": [[list(block) for block in context.blocks] for context in logic.contexts],
        "context_labels": list(logic.context_labels) if logic.context_labels is not None else None,
    }


def to_envelope(obj: Serializable) -> Envelope:
    """
    Wrap a library object in its envelope.

    Raises:
        SerializationError: For objects without an envelope kind.
    """
    if isinstance(obj, MealyAutomaton):
        return Envelope(kind=EnvelopeKind.AUTOMATON, payload=_automaton_payload(obj))
    if isinstance(obj, UrnModel):
        return Envelope(kind=EnvelopeKind.URN, payload=obj.model_dump(mode="json"))
    if isinstance(obj, PartitionLogic):
        return Envelope(kind=EnvelopeKind.LOGIC, payload=_logic_payload(obj))
    if isinstance(obj, CompleteNitSet):
        return Envelope(kind=EnvelopeKind.NITSET, payload={"n": obj.n, "k": obj.k, "export": obj.export_line()})
    if isinstance(obj, list) and all(isinstance(r, TranscriptRecord) for r in obj):
        return Envelope(kind=EnvelopeKind.TRANSCRIPT, payload={"records": [r.model_dump() for r in obj]})
    raise SerializationError(f"Objects of type {type(obj).__name__} have no envelope kind")


def from_envelope(envelope: Envelope) -> Serializable:
    """
    Rebuild the library object from an envelope.

    Raises:
        SerializationError: If the payload does not match the kind.
        AutomatonError: Domain errors of the rebuilt object (e.g. InvalidAutomatonError).
    """
    payload = envelope.payload
    try:
        if envelope.kind == EnvelopeKind.AUTOMATON:
            return build_automaton(
                states=payload["states"],
                inputs=payload["inputs"],
                outputs=payload["outputs"],
                delta=payload["delta"],
                lambda_=payload["lambda"],
            )
        if envelope.kind == EnvelopeKind.URN:
            return UrnModel(**payload)
        if envelope.kind == EnvelopeKind.LOGIC:
            ground = tuple(payload["ground"])
            labels = payload.get("context_labels")
            return PartitionLogic(
                ground=ground,
                contexts=tuple(Partition.from_blocks(blocks, ground) for blocks in payload["contexts"]),
                mode=LogicMode(payload.get("mode", LogicMode.SET_IDENTIFIED.value)),
                context_labels=tuple(labels) if labels is not None else None,
            )
        if envelope.kind == EnvelopeKind.NITSET:
            sets = parse_export(payload["export"], payload["n"], payload["k"])
            if len(sets) != 1:
                raise SerializationError(f"A nitset payload holds one set, got {len(sets)}")
            return sets[0]
        return [TranscriptRecord(**record) for record in payload["records"]]
    except AutomatonError:
        raise
    except (KeyError, TypeError, ValueError) as e:
        logger.error(f"Rejected {envelope.kind.value} payload: {e}")
        raise SerializationError(f"Malformed {envelope.kind.value} payload: {e}") from e


def dumps(obj: Serializable, indent: int = 2) -> str:
    return to_envelope(obj).model_dump_json(indent=indent)


def parse_envelope(text: str) -> Envelope:
    try:
        return Envelope.model_validate(json.loads(text))
    except (ValueError, ValidationError) as e:
        raise SerializationError(f"Malformed envelope: {e}") from e


def loads(text: str) -> Serializable:
    """Parse envelope JSON and rebuild the object it carries."""
    return from_envelope(parse_envelope(text))
