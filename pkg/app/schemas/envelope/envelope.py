"""
Description:
The versioned JSON envelope every serialized object travels in.

Dependencies:
- pydantic: For validating the envelope header.

Author: @kcaparas1630
"""
from enum import Enum
from typing import Any, Dict, Literal

from pydantic import BaseModel, Field

ENVELOPE_VERSION = "1"


class EnvelopeKind(str, Enum):
    AUTOMATON = "automaton"
    URN = "urn"
    LOGIC = "logic"
    NITSET = "nitset"
    TRANSCRIPT = "transcript"


class Envelope(BaseModel):
    kind: EnvelopeKind
    version: Literal["1"] = ENVELOPE_VERSION
    payload: Dict[str, Any] = Field(..., description="Schema determined by kind")
