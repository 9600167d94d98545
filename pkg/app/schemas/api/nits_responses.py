"""
Description:
Response schemas of the nit endpoints.

Dependencies:
- pydantic: For data validation and settings management.

Author: @kcaparas1630
"""
from typing import List, Optional

from pydantic import BaseModel


class NitCountResponse(BaseModel):
    n: int
    k: int
    count: int
    formula: Optional[int] = None
    method: str = "enumeration"


class TessellationResponse(BaseModel):
    export: str
    grid: List[List[int]]
    rendering: str
