"""
Description:
This module sets up a rate limiter for the application using SlowAPI.
Clients are identified by their IP address; the limit comes from the settings.

Dependencies:
- slowapi: For rate limiting functionality.
- slowapi.util: For get_remote_address to retrieve the client's IP address.
- loguru: For logging information about the rate limiter initialization.
- app.core.settings: For the configured limit.

Author: @kcaparas1630
"""
from loguru import logger
from slowapi import Limiter
from slowapi.util import get_remote_address

from app.core.settings import settings

limiter = Limiter(key_func=get_remote_address, default_limits=[settings.rate_limit])
logger.info(f"Rate limiter initialized with {settings.rate_limit}")
