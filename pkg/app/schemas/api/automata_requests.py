"""
Description:
Request and response schemas of the automata endpoints.

Dependencies:
- pydantic: For data validation and settings management.
- app.schemas.envelope: For the serialized objects carried in requests.

Author: @kcaparas1630
"""
from typing import List, Optional

from pydantic import BaseModel, Field

from app.schemas.envelope import Envelope


class AutomatonRequest(BaseModel):
    """
    An automaton envelope and the longest input word to consider.
    """
    envelope: Envelope
    max_len: Optional[int] = Field(default=None, ge=0, description="Defaults to |S|-1")


class ComplementarityRequest(BaseModel):
    envelope: Envelope
    max_len: int = Field(default=1, ge=1)


class PartitionsResponse(BaseModel):
    partitions: List[str]
    finest: List[str]


class ComplementarityResponse(BaseModel):
    pairs: List[List[List[str]]] = Field(..., description="Pairs of words, each a list of input labels")


class LogicResponse(BaseModel):
    logic: Envelope
    atoms: int
    elements: int
    two_valued_states: int
    point_induced_states: int
    separating: bool
