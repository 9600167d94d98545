"""
Description:
Runtime configuration loaded from the environment.

Values come from environment variables (optionally from a .env file) and are
validated into a frozen Settings model. Search guards of the library default to
these values and can always be overridden per call.

Dependencies:
- python-dotenv: For loading a local .env file.
- pydantic: For validating the configuration values.
- app.errors.exceptions: For ConfigurationError.

Author: @kcaparas1630
"""
import os

from dotenv import load_dotenv
from pydantic import BaseModel, ConfigDict, Field, ValidationError

from app.errors.exceptions import ConfigurationError

load_dotenv()


class Settings(BaseModel):
    model_config = ConfigDict(frozen=True)

    log_level: str = Field(default="INFO", description="loguru sink level")
    two_valued_state_limit: int = Field(
        default=10**7, ge=1, description="Limit on the product of block counts searched for two-valued states"
    )
    nit_ground_limit: int = Field(
        default=16, ge=1, description="Limit on the number of product states n^k for nit enumeration"
    )
    nit_set_limit: int = Field(
        default=1_000_000, ge=1, description="Limit on the number of complete sets or nit partitions enumerated"
    )
    word_limit: int = Field(
        default=2_000_000, ge=1, description="Limit on the number of explicitly enumerated input words"
    )
    rate_limit: str = Field(default="30/minute", description="Default rate limit of the API")


ENV_VARS = {
    "log_level": "AUTOMATA_LOG_LEVEL",
    "two_valued_state_limit": "AUTOMATA_TWO_VALUED_STATE_LIMIT",
    "nit_ground_limit": "AUTOMATA_NIT_GROUND_LIMIT",
    "nit_set_limit": "AUTOMATA_NIT_SET_LIMIT",
    "word_limit": "AUTOMATA_WORD_LIMIT",
    "rate_limit": "AUTOMATA_RATE_LIMIT",
}


def load_settings() -> Settings:
    """
    Build the Settings model from the current environment.

    Raises:
        ConfigurationError: If a variable is present but invalid.
    """
    values = {field: os.getenv(var) for field, var in ENV_VARS.items()}
    try:
        return Settings(**{field: value for field, value in values.items() if value})
    except ValidationError as e:
        invalid = [ENV_VARS[str(err["loc"][0])] for err in e.errors() if err["loc"]]
        raise ConfigurationError(f"Invalid environment variables: {', '.join(invalid)}") from e


settings = load_settings()
