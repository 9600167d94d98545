"""
Canonical Examples API Route

Description:
Serves the shipped examples as serialization envelopes.

Dependencies:
- fastapi: For defining routes.
- app.services.canonical_examples: For the examples.
- app.helper.serialization: For the envelopes.

Author: @kcaparas1630
"""
from fastapi import APIRouter, Request
from loguru import logger

from app.core.route_limiters import limiter
from app.core.settings import settings
from app.helper.serialization import to_envelope
from app.schemas.envelope import Envelope
from app.services.canonical_examples import get_example

router = APIRouter(
    prefix="/api",
    tags=["examples"],
    responses={404: {"description": "Unknown example"}}
)


@router.get("/examples/{name}", response_model=Envelope)
@limiter.limit(settings.rate_limit)
async def example(request: Request, name: str):
    logger.info(f"Example {name} requested")
    return to_envelope(get_example(name))
