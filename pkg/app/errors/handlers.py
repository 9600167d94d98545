"""
Description:
Centralized error handling for the API and the command-line front end.

Dependencies:
- fastapi: For the JSON error response of the service surface.
- loguru: For logging domain errors before they are rendered.
- app.errors.exceptions: For the domain error hierarchy.

Author: @kcaparas1630
"""
from fastapi import Request
from fastapi.responses import JSONResponse
from loguru import logger

from app.errors.exceptions import AutomatonError, InvalidAutomatonError

EXIT_OK = 0
EXIT_DOMAIN_ERROR = 1
EXIT_USAGE_ERROR = 2


def automaton_exception_handler(request: Request, exc: AutomatonError):
    logger.error(f"{request.method} {request.url.path} failed: {exc.detail}")
    content = {"detail": exc.detail}
    if isinstance(exc, InvalidAutomatonError):
        content["diagnostics"] = exc.diagnostics
    return JSONResponse(status_code=exc.status_code, content=content)


def generic_exception_handler(request: Request, exc: Exception):
    logger.exception(f"Unexpected error on {request.url.path}: {exc}")
    return JSONResponse(
        status_code=500,
        content={"detail": "An unexpected error occurred."},
    )


def exit_code_for(exc: BaseException) -> int:
    """
    Map an exception raised by a CLI command to a process exit code.

    Domain errors exit with 1, anything caused by the invocation itself
    (bad flags, unreadable files) exits with 2.
    """
    if isinstance(exc, AutomatonError):
        return EXIT_DOMAIN_ERROR
    return EXIT_USAGE_ERROR
