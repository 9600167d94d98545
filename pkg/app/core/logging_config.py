"""
Description:
Configures the loguru sink shared by the CLI and the API.

Payloads are written to stdout by the CLI, so log records always go to stderr.

Dependencies:
- loguru: For logging.
- app.core.settings: For the default level.

Author: @kcaparas1630
"""
import sys
from typing import Optional

from loguru import logger

from app.core.settings import settings

LOG_FORMAT = "<green>{time:HH:mm:ss}</green> | <level>{level: <8}</level> | {name}:{function} - {message}"


def configure_logging(level: Optional[str] = None) -> None:
    logger.remove()
    logger.add(sys.stderr, level=(level or settings.log_level).upper(), format=LOG_FORMAT)
    logger.debug("Logging configured")
