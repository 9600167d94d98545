"""
Description:
FastAPI application exposing the automaton library over HTTP.

Dependencies:
- fastapi: For the application, routers and error handlers.
- slowapi: For rate limiting.
- loguru: For logging.

Author: @kcaparas1630
"""
from contextlib import asynccontextmanager

from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse
from loguru import logger
from slowapi import _rate_limit_exceeded_handler
from slowapi.errors import RateLimitExceeded
from starlette.status import HTTP_422_UNPROCESSABLE_ENTITY

from app import __version__
from app.core.logging_config import configure_logging
# Rate Limiter
from app.core.route_limiters import limiter
from app.errors.exceptions import AutomatonError
from app.errors.handlers import automaton_exception_handler, generic_exception_handler
# Routers
from app.routes.automata import router as automata_router
from app.routes.examples import router as examples_router
from app.routes.health import router as health_router
from app.routes.nits import router as nits_router


@asynccontextmanager
async def lifespan(app: FastAPI):
    """Manage application lifespan events."""
    configure_logging()
    logger.info("Application startup completed successfully")
    yield
    logger.info("Application shutdown")


app = FastAPI(
    title="Automaton Partition Logic API",
    description="Experiments, partition logics, urn models, reversible automata and nit enumeration",
    version=__version__,
    lifespan=lifespan,
)

# Centralized error handlers
app.add_exception_handler(AutomatonError, automaton_exception_handler)
app.add_exception_handler(Exception, generic_exception_handler)


@app.exception_handler(RequestValidationError)
async def validation_exception_handler(request: Request, exc: RequestValidationError):
    return JSONResponse(
        status_code=HTTP_422_UNPROCESSABLE_ENTITY,
        content={"detail": exc.errors()},
    )

# Add rate limiter to the app
app.state.limiter = limiter
app.add_exception_handler(RateLimitExceeded, _rate_limit_exceeded_handler)

# Include routers
app.include_router(health_router)
app.include_router(examples_router)
app.include_router(automata_router)
app.include_router(nits_router)
