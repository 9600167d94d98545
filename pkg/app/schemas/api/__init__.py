from .automata_requests import (
    AutomatonRequest,
    ComplementarityRequest,
    ComplementarityResponse,
    LogicResponse,
    PartitionsResponse,
)
from .nits_responses import NitCountResponse, TessellationResponse

__all__ = [
    "AutomatonRequest",
    "ComplementarityRequest",
    "ComplementarityResponse",
    "LogicResponse",
    "NitCountResponse",
    "PartitionsResponse",
    "TessellationResponse",
]
