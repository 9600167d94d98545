"""
Nit Enumeration API Routes

Description:
Counts of complete sets of comeasurable nits and the tessellation of the first one.

The handlers are plain functions so FastAPI runs the searches in its threadpool.
For two particles a count beyond the configured set limit comes from the closed
form instead of the enumeration.

Dependencies:
- fastapi: For defining routes and query validation.
- app.services.nit_enumeration: For the enumeration.

Author: @kcaparas1630
"""
from fastapi import APIRouter, Query, Request
from loguru import logger

from app.core.route_limiters import limiter
from app.core.settings import settings
from app.schemas.api import NitCountResponse, TessellationResponse
from app.services.nit_enumeration import (
    count_formula_k2,
    enumerate_complete_sets,
    first_complete_set,
    format_grid,
    guard_product_states,
    render_tessellation,
    tessellation_grid,
)

router = APIRouter(
    prefix="/api/nits",
    tags=["nits"],
    responses={413: {"description": "Search guard exceeded"}}
)


@router.get("/count", response_model=NitCountResponse)
@limiter.limit(settings.rate_limit)
def count(request: Request, n: int = Query(..., ge=1), k: int = Query(..., ge=1)):
    guard_product_states(n, k)
    formula = count_formula_k2(n) if k == 2 else None
    if formula is not None and formula > settings.nit_set_limit:
        logger.info(f"Counted complete nit sets for n={n}, k=2 by the closed form")
        return NitCountResponse(n=n, k=k, count=formula, formula=formula, method="formula")
    sets = enumerate_complete_sets(n, k)
    logger.info(f"Counted {len(sets)} complete nit sets for n={n}, k={k}")
    return NitCountResponse(n=n, k=k, count=len(sets), formula=formula, method="enumeration")


@router.get("/tessellation", response_model=TessellationResponse)
@limiter.limit(settings.rate_limit)
def tessellation(request: Request, n: int = Query(..., ge=1)):
    first = first_complete_set(n, 2)
    grid = tessellation_grid(first)
    logger.debug(f"Tessellation grid:\n{format_grid(grid)}")
    return TessellationResponse(export=first.export_line(), grid=grid, rendering=render_tessellation(first))
