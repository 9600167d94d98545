"""
Description:
Schemas for the counterfactual automaton: prepared states and transcript records.

Dependencies:
- pydantic: For data validation and JSON serialization.

Author: @kcaparas1630
"""
from pydantic import BaseModel, ConfigDict, Field


class PreparedState(BaseModel):
    """The state (s, o_s): the mode a particle was prepared in and its value in 1..n."""
    model_config = ConfigDict(frozen=True)

    mode: str
    value: int = Field(..., ge=1)


class TranscriptRecord(BaseModel):
    """One measurement; field order is the stable order of the JSON lines transcript."""
    model_config = ConfigDict(frozen=True)

    call_index: int
    mode: str
    output: int
    state_mode: str
    state_value: int
