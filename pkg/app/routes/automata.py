"""
Automata API Routes

Description:
Experiments, complementarity and partition logics of automata sent as
serialization envelopes.
The handlers are plain functions so FastAPI runs the searches in its threadpool.

Arguments:
- body: An AutomatonRequest or ComplementarityRequest holding the automaton envelope.

Returns:
- PartitionsResponse, ComplementarityResponse or LogicResponse.

Dependencies:
- fastapi: For defining routes.
- app.services.experiments: For partitions and complementarity.
- app.services.partition_logic: For atoms, elements and two-valued states.
- loguru: For logging.

Author: @kcaparas1630
"""
from fastapi import APIRouter, Request
from loguru import logger

from app.core.route_limiters import limiter
from app.core.settings import settings
from app.errors.exceptions import SerializationError
from app.helper.serialization import from_envelope, to_envelope
from app.schemas.api import (
    AutomatonRequest,
    ComplementarityRequest,
    ComplementarityResponse,
    LogicResponse,
    PartitionsResponse,
)
from app.schemas.automaton import MealyAutomaton
from app.schemas.envelope import Envelope, EnvelopeKind
from app.services.experiments import (
    complementary_pairs,
    experimental_partitions,
    finest_partitions,
    logic_from_automaton,
)
from app.services.partition_logic import (
    atoms,
    element_count,
    is_separating,
    point_induced_states,
    two_valued_states,
)

router = APIRouter(
    prefix="/api/automata",
    tags=["automata"],
    responses={404: {"description": "Not found"}}
)


def _automaton(envelope: Envelope) -> MealyAutomaton:
    if envelope.kind != EnvelopeKind.AUTOMATON:
        raise SerializationError(f"Expected an automaton envelope, got {envelope.kind.value}")
    return from_envelope(envelope)


@router.post("/partitions", response_model=PartitionsResponse)
@limiter.limit(settings.rate_limit)
def partitions(request: Request, body: AutomatonRequest):
    automaton = _automaton(body.envelope)
    found = experimental_partitions(automaton, body.max_len)
    finest = finest_partitions(automaton, body.max_len)
    logger.info(f"Computed {len(found)} partitions for a {automaton.n_states}-state automaton")
    return PartitionsResponse(
        partitions=[p.format(automaton.states) for p in found],
        finest=[p.format(automaton.states) for p in finest],
    )


@router.post("/complementarity", response_model=ComplementarityResponse)
@limiter.limit(settings.rate_limit)
def complementarity(request: Request, body: ComplementarityRequest):
    automaton = _automaton(body.envelope)
    pairs = complementary_pairs(automaton, body.max_len)
    return ComplementarityResponse(
        pairs=[
            [list(automaton.input_word_labels(first)), list(automaton.input_word_labels(second))]
            for first, second in pairs
        ]
    )


@router.post("/logic", response_model=LogicResponse)
@limiter.limit(settings.rate_limit)
def logic(request: Request, body: AutomatonRequest):
    automaton = _automaton(body.envelope)
    pasted = logic_from_automaton(automaton, body.max_len)
    states = two_valued_states(pasted)
    return LogicResponse(
        logic=to_envelope(pasted),
        atoms=len(atoms(pasted)),
        elements=element_count(pasted),
        two_valued_states=len(states),
        point_induced_states=len(point_induced_states(pasted)),
        separating=is_separating(pasted, states),
    )
