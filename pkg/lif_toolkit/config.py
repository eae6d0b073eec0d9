"""config.py: run configuration for the command line front end."""
from typing import Literal

from pydantic import BaseModel, ConfigDict, Field

DEFAULT_ORDER = 16
DEFAULT_TRIALS = 50
MAX_SEED = 2 ** 64 - 1


class CliConfig(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid")

    order: int = Field(DEFAULT_ORDER, ge=1)
    format: Literal["plain", "json"] = "plain"
    seed: int = Field(0, ge=0, le=MAX_SEED)
    trials: int = Field(DEFAULT_TRIALS, ge=1)
    workers: int = Field(1, ge=1)
